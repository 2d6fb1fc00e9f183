"""Betti numbers, Poincare series, and regularity of stable ideals.

Every invariant here has two independent routes: a closed form over the
minimal generators (binomials in max_index and degree) and a count over
the actual resolution basis.  The test suite ties the routes together.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import SkewekError
from .ideal import MonomialIdeal
from .monoid import degree, max_index
from .resolution import admissible_basis, symbol_internal_degree


def betti_formula(I: MonomialIdeal, q: int) -> int:
    """Closed form: sum over generators u of binom(max_index(u) - 1, q)."""
    if q < 0:
        raise SkewekError("homological degree must be >= 0")
    return sum(comb(max_index(u) - 1, q) for u in I.generators)


def betti_from_resolution(I: MonomialIdeal, q: int) -> int:
    """Rank of the q-th free module, by counting admissible symbols."""
    if q < 0:
        raise SkewekError("homological degree must be >= 0")
    return len(admissible_basis(I, q))


def graded_betti(I: MonomialIdeal) -> dict[tuple[int, int], int]:
    """Counts of admissible symbols by (homological, internal) degree."""
    table: dict[tuple[int, int], int] = {}
    if I.is_zero():
        return table
    pd = projective_dimension(I)
    for q in range(pd + 1):
        for sym in admissible_basis(I, q):
            key = (q, symbol_internal_degree(sym))
            table[key] = table.get(key, 0) + 1
    return table


def projective_dimension(I: MonomialIdeal) -> int:
    if I.is_zero():
        raise SkewekError("the zero ideal has no projective dimension")
    return max(max_index(u) for u in I.generators) - 1


def tor_regularity(I: MonomialIdeal) -> int:
    """max over (q, j) with nonzero graded Betti number of j - q.

    For stable ideals this collapses to the top generator degree.
    """
    if I.is_zero():
        raise SkewekError("the zero ideal has no regularity")
    return max(degree(u) for u in I.generators)


def cm_regularity(I: MonomialIdeal) -> int:
    """Castelnuovo-Mumford regularity; equals tor_regularity here."""
    return tor_regularity(I)


@dataclass(frozen=True)
class RationalSeries:
    """sum over generators of t^deg / (1-t)^k, plus a common-denominator form.

    numerator holds the coefficients of sum t^deg (1-t)^(n-k) so the series
    equals numerator / (1-t)^n exactly.
    """

    n: int
    summands: tuple[tuple[int, int], ...]  # (degree of u, n - max_index(u) + 1)
    numerator: tuple[int, ...]

    def coefficient(self, d: int) -> int:
        """Exact coefficient of t^d in the series expansion."""
        if d < 0:
            return 0
        total = 0
        for dg, k in self.summands:
            if d >= dg:
                total += comb(d - dg + k - 1, k - 1)
        return total

    def expand(self, max_degree: int) -> list[int]:
        return [self.coefficient(d) for d in range(max_degree + 1)]


def poincare_series(I: MonomialIdeal) -> RationalSeries:
    """Generating function counting the monomials inside the ideal.

    Each generator u accounts for the members with head u; those are u
    times an arbitrary monomial in the variables >= max_index(u).
    """
    summands = tuple((degree(u), I.n - max_index(u) + 1) for u in I.generators)
    num = [0] * (I.max_gen_degree() + I.n + 1)
    for dg, k in summands:
        # t^dg * (1-t)^(n-k) added coefficientwise
        for i in range(I.n - k + 1):
            num[dg + i] += (-1) ** i * comb(I.n - k, i)
    while num and num[-1] == 0:
        num.pop()
    return RationalSeries(I.n, summands, tuple(num))
