import random

import pytest

from skewek.errors import DimensionError, LaurentError, UnitMonomialError
from skewek.monoid import (
    degree,
    divides,
    is_effective,
    max_index,
    min_index,
    monomial_key,
    monomials_of_degree,
    quotient,
    star,
    unit,
    variable,
)


def test_star_and_quotient_examples():
    assert star((2, 0), (1, 1)) == (3, 1)
    assert quotient((1, 1), (2, 0)) == (-1, 1)
    assert quotient((3, 1), (1, 1)) == (2, 0)
    assert star((0, 0), (5, 7)) == (5, 7)


def test_divides_examples():
    assert divides((1, 0), (2, 3))
    assert not divides((3, 0), (2, 3))
    assert divides((0, 0), (0, 0))


def test_divides_rejects_laurent():
    with pytest.raises(LaurentError):
        divides((1, -1), (2, 0))
    with pytest.raises(LaurentError):
        divides((1, 0), (2, -1))


def test_support_statistics():
    assert max_index((2, 0, 1)) == 3
    assert max_index((2, 0, 0)) == 1
    assert min_index((0, 1, 1)) == 2
    assert degree((2, 0, 1)) == 3
    assert degree((0, 0)) == 0
    assert degree((1, -2)) == -1


def test_unit_monomial_has_no_support_statistics():
    with pytest.raises(UnitMonomialError):
        max_index((0, 0))
    with pytest.raises(UnitMonomialError):
        min_index((0, 0, 0))


def test_support_statistics_reject_laurent():
    with pytest.raises(LaurentError):
        max_index((1, -1))


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        star((1, 0), (1, 0, 0))
    with pytest.raises(DimensionError):
        quotient((1,), (1, 0))


def test_variable_and_unit():
    assert unit(3) == (0, 0, 0)
    assert variable(3, 1) == (1, 0, 0)
    assert variable(3, 3) == (0, 0, 1)
    with pytest.raises(DimensionError):
        variable(3, 4)


def _random_mono(rng, n, lo=-4, hi=6):
    return tuple(rng.randint(lo, hi) for _ in range(n))


def test_monoid_laws_on_random_vectors():
    rng = random.Random(20260814)
    for _ in range(300):
        n = rng.randint(1, 6)
        a, b, c = (_random_mono(rng, n) for _ in range(3))
        assert star(a, b) == star(b, a)
        assert star(star(a, b), c) == star(a, star(b, c))
        assert star(a, unit(n)) == a
        assert quotient(star(a, b), b) == a
        assert degree(star(a, b)) == degree(a) + degree(b)


def test_divides_iff_quotient_effective():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 5)
        a = tuple(rng.randint(0, 5) for _ in range(n))
        b = tuple(rng.randint(0, 5) for _ in range(n))
        assert divides(b, a) == is_effective(quotient(a, b))


def test_min_at_most_max():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 5)
        a = tuple(rng.randint(0, 3) for _ in range(n))
        if all(e == 0 for e in a):
            continue
        assert min_index(a) <= max_index(a)


def test_monomials_of_degree_enumeration():
    twos = list(monomials_of_degree(2, 2))
    assert twos == [(2, 0), (1, 1), (0, 2)]
    assert twos == sorted(twos, key=monomial_key)
    assert len(list(monomials_of_degree(4, 3))) == 20  # binom(3+3, 3)
