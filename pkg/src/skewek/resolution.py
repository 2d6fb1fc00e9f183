"""The minimal free resolution of a stable ideal by admissible symbols.

Basis symbols are pairs e(sigma; u): u a minimal generator, sigma a strictly
increasing tuple of variable indices with last(sigma) < max_index(u).  The
homological degree is len(sigma).  The differential of e(sigma; u) is

    sum_r (-1)^r e(sigma_r; u) * C(x_{sigma_r} u, x_{i_r})^{-1} x_{i_r}
  - sum_r (-1)^r e(sigma_r; u_r) * C(x_{sigma_r}, y_r)^{-1} y_r

where sigma_r drops the r-th index i_r, x_{i_r} u = u_r * y_r is the
canonical decomposition, and second-sum terms whose symbol is not
admissible are dropped (they land in the subcomplex the quotient kills).
ambient_differential keeps those terms; it is the differential of the
larger complex on all strictly increasing symbols.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .commutation import Scalar, bichar_c, scalar_from_json, scalar_to_json
from .errors import InternalInvariantError, SkewekError
from .ideal import MonomialIdeal, decompose, require_stable
from .monoid import (
    Mono,
    degree,
    is_unit,
    max_index,
    monomial_key,
    star,
    variable,
)


@dataclass(frozen=True)
class Symbol:
    sigma: tuple[int, ...]
    gen: Mono

    def __post_init__(self):
        if any(a >= b for a, b in zip(self.sigma, self.sigma[1:])):
            raise SkewekError(f"index tuple {self.sigma} is not strictly increasing")
        if self.sigma and not 1 <= self.sigma[0]:
            raise SkewekError(f"index tuple {self.sigma} is not 1-based")

    def homological_degree(self) -> int:
        return len(self.sigma)


def indicator(n: int, sigma: tuple[int, ...]) -> Mono:
    """x_sigma: the squarefree monomial with support sigma."""
    out = [0] * n
    for i in sigma:
        if not 1 <= i <= n:
            raise SkewekError(f"index {i} out of range 1..{n}")
        out[i - 1] = 1
    return tuple(out)


def is_admissible(sym: Symbol) -> bool:
    return not sym.sigma or sym.sigma[-1] < max_index(sym.gen)


def symbol_multidegree(sym: Symbol) -> Mono:
    return star(indicator(len(sym.gen), sym.sigma), sym.gen)


def symbol_internal_degree(sym: Symbol) -> int:
    return len(sym.sigma) + degree(sym.gen)


def symbol_key(sym: Symbol):
    return (monomial_key(sym.gen), sym.sigma)


class Term(NamedTuple):
    """coef * x^mono * symbol, a summand of a free-module element."""

    coef: Scalar
    mono: Mono
    sym: Symbol


def admissible_basis(I: MonomialIdeal, q: int) -> list[Symbol]:
    """All admissible symbols of homological degree q, canonically ordered."""
    syms = []
    for u in I.generators:
        top = max_index(u)
        for sigma in itertools.combinations(range(1, top), q):
            syms.append(Symbol(sigma, u))
    return sorted(syms, key=symbol_key)


def _check_symbol(I: MonomialIdeal, sym: Symbol) -> None:
    if sym.gen not in I.generators:
        raise SkewekError(f"{sym.gen} is not a minimal generator")
    if sym.sigma and sym.sigma[-1] > I.n:
        raise SkewekError(f"index {sym.sigma[-1]} out of range 1..{I.n}")


def ambient_differential(I: MonomialIdeal, sym: Symbol) -> list[Term]:
    """Differential in the ambient complex: both sums over every index."""
    _check_symbol(I, sym)
    return _differential_terms(I, sym, drop_inadmissible=False)


def differential(I: MonomialIdeal, sym: Symbol) -> list[Term]:
    """Differential in the resolution; the input must be admissible."""
    _check_symbol(I, sym)
    if not is_admissible(sym):
        raise SkewekError(f"e({','.join(map(str, sym.sigma))};{sym.gen}) is not admissible")
    return list(_differential_cached(I, sym))


@lru_cache(maxsize=1 << 16)
def _differential_cached(I, sym) -> tuple[Term, ...]:
    return tuple(_differential_terms(I, sym, drop_inadmissible=True))


def _differential_terms(I, sym, drop_inadmissible):
    require_stable(I)
    n = I.n
    u = sym.gen
    terms = []
    for r, i_r in enumerate(sym.sigma, start=1):
        sigma_r = sym.sigma[:r - 1] + sym.sigma[r:]
        sign = Scalar(-1) if r % 2 else Scalar(1)
        x_ir = variable(n, i_r)
        cost = bichar_c(star(indicator(n, sigma_r), u), x_ir)
        terms.append(Term(sign * cost.inverse(), x_ir, Symbol(sigma_r, u)))
        head, tail = decompose(I, star(x_ir, u))
        target = Symbol(sigma_r, head)
        if drop_inadmissible and not is_admissible(target):
            continue
        cost2 = bichar_c(indicator(n, sigma_r), tail)
        terms.append(Term(-sign * cost2.inverse(), tail, target))
    if is_admissible(sym):
        # on admissible symbols no two summands share (symbol, monomial);
        # on subcomplex symbols the top summands collide and cancel
        seen = {(t.sym, t.mono) for t in terms}
        if len(seen) != len(terms):
            raise InternalInvariantError("differential produced colliding terms")
    return terms


Matrix = dict[tuple[int, int], tuple[tuple[Scalar, Mono], ...]]


@dataclass(frozen=True)
class FreeComplex:
    """Bases (one tuple of symbols per homological degree) and matrices.

    matrices[q-1] presents d_q: columns are the degree-q basis, rows the
    degree-(q-1) basis, entries act by right multiplication.  The zero
    ideal yields the empty complex (no modules at all).
    """

    ideal: MonomialIdeal
    bases: tuple[tuple[Symbol, ...], ...]
    matrices: tuple[Matrix, ...]

    def ranks(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.bases)

    def length(self) -> int:
        return len(self.bases) - 1

    def augmentation(self) -> list[tuple[Scalar, Mono]]:
        """The map onto the ideal: e(; u) goes to u itself."""
        return [(Scalar.one(), sym.gen) for sym in self.bases[0]] if self.bases else []


def build_resolution(I: MonomialIdeal) -> FreeComplex:
    if I.is_zero():
        return FreeComplex(I, (), ())
    require_stable(I)
    pd = max(max_index(u) for u in I.generators) - 1
    bases = tuple(tuple(admissible_basis(I, q)) for q in range(pd + 1))
    matrices = []
    for q in range(1, pd + 1):
        index = {sym: i for i, sym in enumerate(bases[q - 1])}
        mat: Matrix = {}
        for col, sym in enumerate(bases[q]):
            for t in differential(I, sym):
                key = (index[t.sym], col)
                mat[key] = mat.get(key, ()) + ((t.coef, t.mono),)
        matrices.append(mat)
    return FreeComplex(I, bases, tuple(matrices))


def _entry_product(e1, e2):
    """Right-module composite of two matrix entries: lists of (coef, mono)."""
    out = []
    for c1, m1 in e1:
        for c2, m2 in e2:
            out.append((c1 * c2 * bichar_c(m1, m2), star(m1, m2)))
    return out


class ComplexCheck(NamedTuple):
    ok: bool
    failure: tuple | None  # (q, row, col, surviving terms)

    def __bool__(self) -> bool:
        return self.ok


def verify_complex(cx: FreeComplex) -> ComplexCheck:
    """Multiply consecutive matrices symbolically; every entry must cancel.

    The composite with the augmentation row (e(;u) -> x^u against the first
    matrix) is included, so the check has content even at length one.
    """
    if cx.matrices:
        aug = cx.augmentation()
        by_col: dict[int, list] = {}
        for (i, j), entry in cx.matrices[0].items():
            by_col.setdefault(j, []).append((i, entry))
        for j, col in sorted(by_col.items()):
            cell: dict = {}
            for i, entry in col:
                for coef, mono in _entry_product((aug[i],), entry):
                    key = (mono, coef.q)
                    cell[key] = cell.get(key, 0) + coef.sign
            survivors = [(mul, mono, qexp) for (mono, qexp), mul in cell.items() if mul]
            if survivors:
                return ComplexCheck(False, (1, -1, j, survivors))
    for q in range(len(cx.matrices) - 1):
        a, b = cx.matrices[q], cx.matrices[q + 1]
        a_by_col: dict[int, list] = {}
        for (i, j), entry in a.items():
            a_by_col.setdefault(j, []).append((i, entry))
        b_by_col: dict[int, list] = {}
        for (j, k), entry in b.items():
            b_by_col.setdefault(k, []).append((j, entry))
        for k, col in sorted(b_by_col.items()):
            acc: dict[int, dict] = {}
            for j, entry_b in col:
                for i, entry_a in a_by_col.get(j, ()):
                    for coef, mono in _entry_product(entry_a, entry_b):
                        cell = acc.setdefault(i, {})
                        key = (mono, coef.q)
                        cell[key] = cell.get(key, 0) + coef.sign
            for i, cell in sorted(acc.items()):
                survivors = [(mul, mono, qexp) for (mono, qexp), mul in cell.items() if mul]
                if survivors:
                    return ComplexCheck(False, (q + 2, i, k, survivors))
    return ComplexCheck(True, None)


def is_minimal(cx: FreeComplex) -> bool:
    """No matrix entry may have a unit monomial part."""
    for mat in cx.matrices:
        for entry in mat.values():
            for _, mono in entry:
                if is_unit(mono):
                    return False
    return True


def _collect_terms(terms) -> dict:
    acc: dict = {}
    for coef, mono, sym in terms:
        key = (sym, mono, coef.q)
        acc[key] = acc.get(key, 0) + coef.sign
    return {k: m for k, m in acc.items() if m}


def check_quotient_relation(I: MonomialIdeal) -> ComplexCheck:
    """The resolution differential is the ambient one passed to the quotient.

    Two statements: on admissible symbols, dropping the non-admissible
    ambient terms gives the resolution differential; and on symbols with
    last(sigma) >= max_index(u), the ambient differential only produces
    such symbols again (after cancellation), so they span a subcomplex.
    """
    require_stable(I)
    for u in I.generators:
        top = max_index(u)
        for q in range(1, I.n + 1):
            for sigma in itertools.combinations(range(1, I.n + 1), q):
                sym = Symbol(sigma, u)
                if is_admissible(sym):
                    kept = [t for t in ambient_differential(I, sym) if is_admissible(t.sym)]
                    if _collect_terms(kept) != _collect_terms(differential(I, sym)):
                        return ComplexCheck(False, (sym, "quotient mismatch"))
                else:
                    surviving = _collect_terms(ambient_differential(I, sym))
                    for (tsym, _, _), _mul in surviving.items():
                        if is_admissible(tsym):
                            return ComplexCheck(False, (sym, tsym, "subcomplex leak"))
    return ComplexCheck(True, None)


def check_ambient_square(I: MonomialIdeal) -> ComplexCheck:
    """d.d = 0 over every strictly increasing symbol of the ambient complex."""
    require_stable(I)
    for u in I.generators:
        for q in range(2, I.n + 1):
            for sigma in itertools.combinations(range(1, I.n + 1), q):
                twice = []
                for c1, m1, s1 in ambient_differential(I, Symbol(sigma, u)):
                    for c2, m2, s2 in ambient_differential(I, s1):
                        twice.append(Term(c2 * c1 * bichar_c(m2, m1), star(m2, m1), s2))
                surviving = _collect_terms(twice)
                if surviving:
                    return ComplexCheck(False, (Symbol(sigma, u), surviving))
    return ComplexCheck(True, None)


# --- serialization ---------------------------------------------------------


def symbol_to_json(sym: Symbol) -> dict:
    return {"sigma": list(sym.sigma), "u": list(sym.gen)}


def symbol_from_json(obj: dict) -> Symbol:
    return Symbol(tuple(obj["sigma"]), tuple(obj["u"]))


def matrix_to_json(mat: Matrix) -> list[dict]:
    out = []
    for (row, col) in sorted(mat):
        terms = [
            dict(scalar_to_json(coef), monomial=list(mono)) for coef, mono in mat[(row, col)]
        ]
        out.append({"row": row + 1, "col": col + 1, "terms": terms})
    return out


def matrix_from_json(entries: list[dict]) -> Matrix:
    mat: Matrix = {}
    for e in entries:
        key = (int(e["row"]) - 1, int(e["col"]) - 1)
        terms = tuple(
            (scalar_from_json(t), tuple(t["monomial"])) for t in e["terms"]
        )
        mat[key] = mat.get(key, ()) + terms
    return mat
