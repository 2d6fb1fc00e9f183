"""Multiplication on the resolution and the DG-algebra checks.

The product of two basis symbols e(sigma;u) e(tau;v) is zero when sigma and
tau share an index; otherwise it is a single term supported on the merged
symbol e(sigma tau; g(uv)) with monomial part uv/g(uv) and an explicit
scalar.  product_in_ambient evaluates that formula as is; product projects
it into the resolution, killing results whose merged symbol is not
admissible.  The axiom checks (Leibniz, associativity, color commutativity,
odd squares) run against the projected product, which is the one that is a
DG algebra structure on the resolution.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .commutation import Scalar, bichar_c, chi
from .errors import SkewekError
from .ideal import MonomialIdeal, decompose
from .invariants import projective_dimension
from .monoid import Mono, quotient, star
from .resolution import (
    Symbol,
    Term,
    admissible_basis,
    differential,
    indicator,
    is_admissible,
    symbol_multidegree,
)


def inv_count(sigma: tuple[int, ...], tau: tuple[int, ...]) -> int:
    """Number of out-of-order pairs between two disjoint index tuples."""
    if set(sigma) & set(tau):
        raise SkewekError("index tuples share an entry")
    return sum(1 for i in sigma for j in tau if j < i)


def _merge(sigma: tuple[int, ...], tau: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(sigma + tau))


def product_in_ambient(I: MonomialIdeal, a: Symbol, b: Symbol) -> Term | None:
    """The multiplication formula before projecting to the resolution.

    None when the index tuples intersect; otherwise the single term, whose
    symbol may fail admissibility (it then lies in the killed subcomplex).
    """
    _check_factor(I, a)
    _check_factor(I, b)
    if set(a.sigma) & set(b.sigma):
        return None
    n = I.n
    u, v = a.gen, b.gen
    x_sigma = indicator(n, a.sigma)
    x_tau = indicator(n, b.sigma)
    head, tail = decompose(I, star(u, v))
    sign = Scalar(-1) if inv_count(a.sigma, b.sigma) % 2 else Scalar(1)
    coef = (
        sign
        * chi(u, x_tau)
        * bichar_c(x_sigma, x_tau)
        * bichar_c(u, v)
        * bichar_c(x_sigma, quotient(head, u))
        * bichar_c(x_tau, quotient(head, v))
    )
    return Term(coef, tail, Symbol(_merge(a.sigma, b.sigma), head))


def product(I: MonomialIdeal, a: Symbol, b: Symbol) -> Term | None:
    """Product of two admissible symbols inside the resolution."""
    t = product_in_ambient(I, a, b)
    if t is None or not is_admissible(t.sym):
        return None
    return t


def _check_factor(I: MonomialIdeal, s: Symbol) -> None:
    if s.gen not in I.generators:
        raise SkewekError(f"{s.gen} is not a minimal generator")
    if not is_admissible(s):
        raise SkewekError("product factors must be admissible symbols")


def _module_product(I, lhs, rhs, product_fn) -> list[Term]:
    out = []
    for c1, m1, s1 in lhs:
        for c2, m2, s2 in rhs:
            p = product_fn(I, s1, s2)
            if p is None:
                continue
            coef = (
                c1
                * c2
                * chi(m1, symbol_multidegree(s2))
                * p.coef
                * bichar_c(p.mono, m1)
                * bichar_c(star(p.mono, m1), m2)
            )
            out.append(Term(coef, star(star(p.mono, m1), m2), p.sym))
    return as_term_list(collect(out))


def module_product(I: MonomialIdeal, lhs, rhs) -> list[Term]:
    """Bilinear extension of product to sums of terms.

    Ring monomials move past symbols via chi against the symbol's
    multidegree.  Like terms are collected; a surviving multiplicity
    beyond +-1 is emitted as repeated copies of the same term.
    """
    return _module_product(I, lhs, rhs, product)


# --- canonical linear-combination form --------------------------------------

Element = dict[tuple[Symbol, Mono, tuple], int]


def collect(terms) -> Element:
    """Group by (symbol, monomial, q-exponents), summing integer signs."""
    acc: Element = {}
    for coef, mono, sym in terms:
        key = (sym, mono, coef.q)
        acc[key] = acc.get(key, 0) + coef.sign
    return {k: m for k, m in acc.items() if m}


def as_term_list(elem: Element) -> list[Term]:
    out = []
    for (sym, mono, qexp), mul in sorted(
        elem.items(), key=lambda kv: (kv[0][0].sigma, kv[0][0].gen, kv[0][1], kv[0][2])
    ):
        for _ in range(abs(mul)):
            out.append(Term(Scalar(1 if mul > 0 else -1, qexp), mono, sym))
    return out


def scale(terms, scalar: Scalar) -> list[Term]:
    return [Term(scalar * c, m, s) for c, m, s in terms]


def apply_differential(I: MonomialIdeal, terms) -> list[Term]:
    """d of a sum of terms, d(e * r) = d(e) * r."""
    out = []
    for c, m, s in terms:
        for dc, dm, ds in differential(I, s):
            out.append(Term(dc * c * bichar_c(dm, m), star(dm, m), ds))
    return out


# --- multiplication table ---------------------------------------------------


@dataclass(frozen=True)
class TableEntry:
    left: Symbol
    right: Symbol
    ambient: Term | None  # formula value; symbol may be non-admissible
    reduced: Term | None  # value inside the resolution


@dataclass(frozen=True)
class MultiplicationTable:
    ideal: MonomialIdeal
    symbols: tuple[Symbol, ...]
    entries: dict[tuple[int, int], TableEntry] = field(compare=False)


def full_basis(I: MonomialIdeal) -> list[Symbol]:
    """All admissible symbols, ordered by homological degree then basis order."""
    if I.is_zero():
        return []
    out = []
    for q in range(projective_dimension(I) + 1):
        out.extend(admissible_basis(I, q))
    return out


def multiplication_table(I: MonomialIdeal) -> MultiplicationTable:
    syms = tuple(full_basis(I))
    entries = {}
    for i, a in enumerate(syms):
        for j, b in enumerate(syms):
            amb = product_in_ambient(I, a, b)
            red = amb if amb is not None and is_admissible(amb.sym) else None
            entries[(i, j)] = TableEntry(a, b, amb, red)
    return MultiplicationTable(I, syms, entries)


# --- axiom checks ------------------------------------------------------------


@dataclass
class CheckResult:
    ok: bool
    failures: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _record(result: CheckResult, failure) -> None:
    result.ok = False
    if len(result.failures) < 10:
        result.failures.append(failure)


def check_leibniz(I: MonomialIdeal, product_fn=None) -> CheckResult:
    """d(ab) = d(a) b + (-1)^{|a|} a d(b) over all basis symbol pairs."""
    mp = _module_product_with(I, product_fn)
    fn = product_fn or product
    basis = full_basis(I)
    unit_m = (0,) * I.n
    as_terms = {s: [Term(Scalar.one(), unit_m, s)] for s in basis}
    diffs = {s: apply_differential(I, as_terms[s]) for s in basis}
    result = CheckResult(True)
    for a in basis:
        sign = Scalar(-1) if len(a.sigma) % 2 else Scalar(1)
        for b in basis:
            p = fn(I, a, b)
            lhs = apply_differential(I, [p]) if p is not None else []
            rhs = mp(diffs[a], as_terms[b]) + scale(mp(as_terms[a], diffs[b]), sign)
            if collect(lhs) != collect(rhs):
                _record(result, (a, b, collect(lhs), collect(rhs)))
    return result


def check_associativity(I: MonomialIdeal, product_fn=None) -> CheckResult:
    """(ab)c = a(bc) over all basis symbol triples."""
    mp = _module_product_with(I, product_fn)
    basis = full_basis(I)
    unit_m = (0,) * I.n
    result = CheckResult(True)
    as_terms = {s: [Term(Scalar.one(), unit_m, s)] for s in basis}
    for a in basis:
        for b in basis:
            ab = mp(as_terms[a], as_terms[b])
            for c in basis:
                left = mp(ab, as_terms[c])
                right = mp(as_terms[a], mp(as_terms[b], as_terms[c]))
                if collect(left) != collect(right):
                    _record(result, (a, b, c, collect(left), collect(right)))
    return result


def check_color_commutativity(I: MonomialIdeal) -> CheckResult:
    """ab = (-1)^{|a||b|} chi(deg a, deg b) ba over all basis symbol pairs."""
    basis = full_basis(I)
    result = CheckResult(True)
    for a in basis:
        for b in basis:
            ab = product(I, a, b)
            ba = product(I, b, a)
            factor = chi(symbol_multidegree(a), symbol_multidegree(b))
            if (len(a.sigma) * len(b.sigma)) % 2:
                factor = -factor
            rhs = scale([ba], factor) if ba is not None else []
            lhs = [ab] if ab is not None else []
            if collect(lhs) != collect(rhs):
                _record(result, (a, b, collect(lhs), collect(rhs)))
    return result


def check_odd_squares(I: MonomialIdeal, trials: int = 100, seed: int = 0) -> CheckResult:
    """Squares of random odd, trihomogeneous elements vanish.

    Samples a multidegree, takes the full component basis there in one odd
    homological degree, attaches random scalars, and squares the sum.  All
    summands share homological, internal, and multi- degree by construction.
    """
    basis = full_basis(I)
    odd = {}
    for s in basis:
        if len(s.sigma) % 2:
            odd.setdefault(len(s.sigma), []).append(s)
    result = CheckResult(True)
    if not odd:
        return result
    rng = random.Random(seed)
    degrees = sorted(odd)
    pairs = [(i, j) for i in range(1, I.n + 1) for j in range(i + 1, I.n + 1)]
    for _ in range(trials):
        q = degrees[rng.randrange(len(degrees))]
        anchor = odd[q][rng.randrange(len(odd[q]))]
        a = list(symbol_multidegree(anchor))
        for k in range(I.n):
            a[k] += rng.randint(0, 2)
        a = tuple(a)
        element = []
        for s in odd[q]:
            m = quotient(a, symbol_multidegree(s))
            if any(e < 0 for e in m):
                continue
            exps = {p: rng.randint(-2, 2) for p in pairs}
            coef = Scalar.make(rng.choice((1, -1)), exps)
            element.append(Term(coef, m, s))
        square = collect(module_product(I, element, element))
        if square:
            _record(result, (a, q, element, square))
    return result


def check_augmentation(I: MonomialIdeal) -> CheckResult:
    """Degree-zero products are compatible with e(;u) -> u."""
    result = CheckResult(True)
    unit_m = (0,) * I.n
    for u in I.generators:
        for v in I.generators:
            t = product(I, Symbol((), u), Symbol((), v))
            # epsilon(e(;g) c x^m) = c C(g, m) x^{g+m}; u * v = C(u,v) x^{u+v}
            lhs = (t.coef * bichar_c(t.sym.gen, t.mono), star(t.sym.gen, t.mono))
            rhs = (bichar_c(u, v), star(u, v))
            if lhs != rhs:
                _record(result, (u, v, lhs, rhs))
    return result


def _module_product_with(I, product_fn):
    fn = product_fn or product
    return lambda lhs, rhs: _module_product(I, lhs, rhs, fn)
