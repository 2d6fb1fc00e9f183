"""Monomial ideals, stability, and the canonical generator decomposition.

A monomial ideal is stored by its minimal generators.  Stability means:
for every generator u and every i < max_index(u), x_i * u / x_{max} stays
in the ideal.  For stable ideals every member w factors uniquely as
w = g(w) * y with g(w) a minimal generator and max_index(g(w)) <= min_index(y);
decompose computes that factorization and everything downstream leans on it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .commutation import bichar_c
from .errors import (
    DimensionError,
    LaurentError,
    InternalInvariantError,
    NotInIdealError,
    NotStableError,
    SkewekError,
    UnitIdealError,
)
from .monoid import (
    Mono,
    degree,
    divides,
    is_effective,
    is_unit,
    max_index,
    min_index,
    monomial_key,
    monomials_of_degree,
    quotient,
    star,
    variable,
)


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal generators, canonically sorted.  Build via minimalize()."""

    n: int
    generators: tuple[Mono, ...]

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.n:
                raise DimensionError(f"generator {g} does not live in {self.n} variables")
            if not is_effective(g):
                raise LaurentError(f"generator {g} has a negative exponent")
            if is_unit(g):
                raise UnitIdealError("the unit monomial generates the unit ideal")
        for a, b in itertools.combinations(self.generators, 2):
            if divides(a, b) or divides(b, a):
                raise InternalInvariantError("generators are not minimal")
        if list(self.generators) != sorted(self.generators, key=monomial_key):
            raise InternalInvariantError("generators are not canonically sorted")

    def is_zero(self) -> bool:
        return not self.generators

    def max_gen_degree(self) -> int:
        return max((degree(g) for g in self.generators), default=0)


def minimalize(n: int, raw) -> tuple[MonomialIdeal, list[Mono]]:
    """Drop generators divisible by another; returns (ideal, removed)."""
    gens = []
    for g in raw:
        g = tuple(int(e) for e in g)
        if len(g) != n:
            raise DimensionError(f"generator {g} does not live in {n} variables")
        if not is_effective(g):
            raise LaurentError(f"generator {g} has a negative exponent")
        if is_unit(g):
            raise UnitIdealError("the unit monomial generates the unit ideal")
        gens.append(g)
    gens = sorted(set(gens), key=monomial_key)
    keep, removed = [], []
    for g in gens:
        if any(divides(h, g) for h in gens if h != g):
            removed.append(g)
        else:
            keep.append(g)
    return MonomialIdeal(n, tuple(keep)), removed


def ideal(n: int, raw) -> MonomialIdeal:
    """minimalize, discarding the removal report."""
    return minimalize(n, raw)[0]


def contains(I: MonomialIdeal, w: Mono) -> bool:
    if len(w) != I.n:
        raise DimensionError(f"{w} does not live in {I.n} variables")
    if not is_effective(w):
        raise LaurentError("membership is defined for effective monomials only")
    return any(divides(g, w) for g in I.generators)


class StabilityResult(NamedTuple):
    ok: bool
    witness: tuple[Mono, int] | None

    def __bool__(self) -> bool:
        return self.ok


@lru_cache(maxsize=4096)
def is_stable(I: MonomialIdeal) -> StabilityResult:
    """Exchange condition checked on minimal generators (which suffices)."""
    for u in I.generators:
        m = max_index(u)
        shifted = quotient(u, variable(I.n, m))
        for i in range(1, m):
            if not contains(I, star(variable(I.n, i), shifted)):
                return StabilityResult(False, (u, i))
    return StabilityResult(True, None)


def require_stable(I: MonomialIdeal) -> None:
    res = is_stable(I)
    if not res.ok:
        u, i = res.witness
        raise NotStableError(
            f"not stable: x_{i} * {u} / x_{max_index(u)} falls outside the ideal",
            witness=res.witness,
        )


class Decomposition(NamedTuple):
    head: Mono  # the unique minimal generator g(w)
    tail: Mono  # w / g(w), supported in variables >= max_index(head)


@lru_cache(maxsize=65536)
def decompose(I: MonomialIdeal, w: Mono) -> Decomposition:
    """Canonical factorization w = head * tail with max(head) <= min(tail).

    Requires I stable and w a member.  All candidate generators are
    scanned so uniqueness is verified on every call, not assumed.
    """
    if not contains(I, w):
        raise NotInIdealError(f"{w} is not a member of the ideal")
    require_stable(I)
    found = None
    for g in I.generators:
        if not divides(g, w):
            continue
        tail = quotient(w, g)
        if is_unit(tail) or max_index(g) <= min_index(tail):
            if found is not None:
                raise InternalInvariantError(f"two canonical factorizations of {w}")
            found = Decomposition(g, tail)
    if found is None:
        raise InternalInvariantError(f"no canonical factorization of {w}")
    return found


def decomposition_cost(I: MonomialIdeal, w: Mono):
    """The reordering scalar between head and tail; trivial for members."""
    head, tail = decompose(I, w)
    return bichar_c(head, tail)


def monomials_up_to_degree(I: MonomialIdeal, d: int) -> list[Mono]:
    """All members of degree <= d, graded-lex ordered."""
    out = []
    for total in range(1, d + 1):
        for w in monomials_of_degree(I.n, total):
            if contains(I, w):
                out.append(w)
    return sorted(out, key=monomial_key)


def stable_closure(n: int, raw) -> MonomialIdeal:
    """Smallest stable ideal containing the given monomials.

    Worklist of exchange moves x_i * w / x_{max(w)}; each move preserves
    degree, so termination is immediate (finitely many monomials per degree).
    """
    I, _ = minimalize(n, raw)
    while True:
        missing = []
        for u in I.generators:
            m = max_index(u)
            shifted = quotient(u, variable(n, m))
            for i in range(1, m):
                cand = star(variable(n, i), shifted)
                if not contains(I, cand):
                    missing.append(cand)
        if not missing:
            return I
        I, _ = minimalize(n, list(I.generators) + missing)


# --- serialization ---------------------------------------------------------


def ideal_to_json(I: MonomialIdeal) -> dict:
    return {"schema": 1, "n": I.n, "generators": [list(g) for g in I.generators]}


def ideal_from_json(obj: dict) -> tuple[MonomialIdeal, list[Mono]]:
    """Parse and minimalize; returns (ideal, removed-redundant-generators)."""
    schema = obj.get("schema", 1)
    if schema != 1:
        raise SkewekError(f"unsupported schema version {schema}")
    n = int(obj["n"])
    if n < 1:
        raise SkewekError("need at least one variable")
    return minimalize(n, [tuple(g) for g in obj["generators"]])
