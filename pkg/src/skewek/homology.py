"""Multidegree-by-multidegree exactness certification under specializations.

The resolution claims to resolve the ideal; this module checks it on
actual numbers.  Fix a field specialization of the q parameters.  Every
multidegree a cuts out a finite-dimensional complex of components; we
compute exact ranks of the restricted differentials (Gaussian elimination
mod p, Fraction arithmetic over the rationals) and require vanishing
homology in positive degrees and ker(augmentation) = im(d_1) at degree 0,
with the Euler characteristic identity as a cheap precheck.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .commutation import FieldSpecialization, Scalar, bichar_c
from .errors import SkewekError
from .ideal import MonomialIdeal, contains
from .monoid import Mono, quotient
from .resolution import (
    FreeComplex,
    Term,
    admissible_basis,
    build_resolution,
    symbol_multidegree,
)


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Row-echelon rank over F_p; mutates a local copy."""
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][c] % p:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c] % p:
                f = rows[r][c]
                rows[r] = [(v - f * w) % p for v, w in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def rank_exact(rows: list[list[Fraction]]) -> int:
    """Row-echelon rank over Q with exact Fraction arithmetic."""
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][c]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][c]
        rows[rank] = [v / lead for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c]:
                f = rows[r][c]
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def component_basis(I: MonomialIdeal, q: int, a: Mono) -> list[Term]:
    """Basis of the multidegree-a component of the q-th free module.

    One term e(sigma;u) x^m per admissible symbol whose multidegree
    divides x^a, with m the complementary exponent vector.
    """
    out = []
    for sym in admissible_basis(I, q):
        m = quotient(a, symbol_multidegree(sym))
        if all(e >= 0 for e in m):
            out.append(Term(Scalar.one(), m, sym))
    return out


@dataclass(frozen=True)
class ExactnessReport:
    ok: bool
    field: str
    prime: int | None
    bound: Mono
    multidegrees_checked: int
    homology: dict = field(compare=False)  # multidegree -> tuple of dims, spot 0 first
    violations: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def check_exactness(
    I: MonomialIdeal,
    phi: FieldSpecialization,
    bound: Mono | None = None,
    cx: FreeComplex | None = None,
) -> ExactnessReport:
    """Certify vanishing homology against the ideal membership predicate.

    bound defaults to the componentwise maximum of the generators plus 2.
    A prebuilt complex can be passed in (the negative-control tests feed
    mutated matrices through here); by default the resolution is built.
    """
    if phi.n != I.n:
        raise SkewekError(f"specialization has n={phi.n}, ideal has n={I.n}")
    if cx is None:
        cx = build_resolution(I)
    if bound is None:
        bound = tuple(
            max((g[k] for g in I.generators), default=0) + 2 for k in range(I.n)
        )
    if len(bound) != I.n or any(b < 0 for b in bound):
        raise SkewekError(f"bad multidegree bound {bound}")

    mdegs = [[symbol_multidegree(s) for s in basis] for basis in cx.bases]
    # specialized sparse columns of each matrix: col -> list of (row, value, mono)
    columns = []
    for mat in cx.matrices:
        by_col: dict[int, list] = {}
        for (i, j), entry in mat.items():
            for coef, mono in entry:
                by_col.setdefault(j, []).append((i, phi.evaluate(coef), mono))
        columns.append(by_col)

    zero = 0
    homology: dict[Mono, tuple] = {}
    violations = []
    checked = 0
    for a in itertools.product(*(range(b + 1) for b in bound)):
        checked += 1
        member = contains(I, a)
        comp = [
            [j for j, md in enumerate(level) if all(x >= y for x, y in zip(a, md))]
            for level in mdegs
        ]
        dims = [len(c) for c in comp]
        if not member:
            if any(dims):
                violations.append((a, "components of a non-member multidegree"))
            continue
        if not dims:
            violations.append((a, "member multidegree but empty complex"))
            continue
        euler = sum((-1) ** q * d for q, d in enumerate(dims))
        if euler != 1:
            violations.append((a, f"Euler characteristic {euler} != 1"))
        ranks = []
        for q in range(1, len(dims)):
            rowpos = {i: r for r, i in enumerate(comp[q - 1])}
            rows = [[zero] * dims[q] for _ in range(dims[q - 1])]
            for cpos, j in enumerate(comp[q]):
                m_col = quotient(a, mdegs[q][j])
                for i, val, mono in columns[q - 1].get(j, ()):
                    twist = phi.evaluate(bichar_c(mono, m_col))
                    v = val * twist
                    if phi.field == "Fp":
                        v %= phi.prime
                    rows[rowpos[i]][cpos] = rows[rowpos[i]][cpos] + v
            if phi.field == "Fp":
                ranks.append(rank_mod_p(rows, phi.prime))
            else:
                ranks.append(rank_exact(rows))
        hdims = []
        for q in range(len(dims)):
            below = 1 if q == 0 else ranks[q - 1]  # augmentation has rank 1 here
            above = ranks[q] if q < len(ranks) else 0
            hdims.append(dims[q] - below - above)
        homology[a] = tuple(hdims)
        for q, h in enumerate(hdims):
            if h != 0:
                violations.append((a, f"homology dimension {h} at spot {q}"))
    return ExactnessReport(
        ok=not violations,
        field=phi.field,
        prime=phi.prime,
        bound=tuple(bound),
        multidegrees_checked=checked,
        homology=homology,
        violations=tuple(violations),
    )


def report_to_json(rep: ExactnessReport) -> dict:
    return {
        "schema": 1,
        "ok": rep.ok,
        "field": rep.field,
        "prime": rep.prime,
        "bound": list(rep.bound),
        "multidegrees_checked": rep.multidegrees_checked,
        "violations": [[list(a), msg] for a, msg in rep.violations],
    }
