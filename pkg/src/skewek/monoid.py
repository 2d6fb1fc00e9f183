"""Exact arithmetic on Laurent monomials as integer exponent vectors.

A monomial x^a in n variables is a tuple of n ints.  Effective monomials
(actual ring elements) have every exponent >= 0; quotients may go negative
and are only rejected where an operation needs effectivity.  Variables are
numbered 1..n in every public interface.
"""

from __future__ import annotations

from .errors import DimensionError, LaurentError, UnitMonomialError

Mono = tuple[int, ...]


def _check_pair(a: Mono, b: Mono) -> None:
    if len(a) != len(b):
        raise DimensionError(f"exponent vectors of lengths {len(a)} and {len(b)}")


def unit(n: int) -> Mono:
    return (0,) * n


def variable(n: int, i: int) -> Mono:
    """The monomial x_i, 1-based."""
    if not 1 <= i <= n:
        raise DimensionError(f"variable index {i} out of range 1..{n}")
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def is_effective(a: Mono) -> bool:
    return all(e >= 0 for e in a)


def is_unit(a: Mono) -> bool:
    return all(e == 0 for e in a)


def star(a: Mono, b: Mono) -> Mono:
    """Product of monomials: componentwise exponent sum."""
    _check_pair(a, b)
    return tuple(x + y for x, y in zip(a, b))


def quotient(a: Mono, b: Mono) -> Mono:
    """Laurent quotient a/b: componentwise exponent difference."""
    _check_pair(a, b)
    return tuple(x - y for x, y in zip(a, b))


def divides(b: Mono, a: Mono) -> bool:
    """Whether b divides a inside the monoid of effective monomials."""
    _check_pair(a, b)
    if not (is_effective(a) and is_effective(b)):
        raise LaurentError("divisibility is defined for effective monomials only")
    return all(x >= y for x, y in zip(a, b))


def degree(a: Mono) -> int:
    return sum(a)


def _support_index(a: Mono, pick) -> int:
    if not is_effective(a):
        raise LaurentError("support statistics need an effective monomial")
    support = [i + 1 for i, e in enumerate(a) if e > 0]
    if not support:
        raise UnitMonomialError("the unit monomial has empty support")
    return pick(support)


def max_index(a: Mono) -> int:
    """Largest i with a_i > 0, 1-based."""
    return _support_index(a, max)


def min_index(a: Mono) -> int:
    """Smallest i with a_i > 0, 1-based."""
    return _support_index(a, min)


def monomial_key(a: Mono):
    """Graded-lex sort key: degree first, then x_1-major exponents descending.

    For equal degrees this orders x^2 before xy before y^2, matching the
    basis ordering used everywhere in the package.
    """
    return (degree(a), tuple(-e for e in a))


def monomials_of_degree(n: int, d: int):
    """Yield all effective monomials of total degree d, graded-lex order."""
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest
