import random

import pytest

from skewek.commutation import Scalar, bichar_c
from skewek.errors import (
    LaurentError,
    NotInIdealError,
    NotStableError,
    UnitIdealError,
)
from skewek.families import random_stable_ideal
from skewek.ideal import (
    contains,
    decompose,
    decomposition_cost,
    ideal,
    ideal_from_json,
    ideal_to_json,
    is_stable,
    minimalize,
    monomials_up_to_degree,
    require_stable,
    stable_closure,
)
from skewek.monoid import (
    degree,
    divides,
    max_index,
    min_index,
    is_unit,
    monomials_of_degree,
    quotient,
    star,
    variable,
)

SQ = ideal(2, [(2, 0), (1, 1), (0, 2)])  # all monomials of degree two


def test_minimalize():
    I, removed = minimalize(2, [(2, 0), (3, 0), (1, 1)])
    assert I.generators == ((2, 0), (1, 1))
    assert removed == [(3, 0)]
    I2, removed2 = minimalize(2, [(1, 0), (1, 0)])
    assert I2.generators == ((1, 0),)
    assert removed2 == []


def test_minimalize_rejects_unit_and_laurent():
    with pytest.raises(UnitIdealError):
        minimalize(2, [(0, 0)])
    with pytest.raises(LaurentError):
        minimalize(2, [(1, -1)])


def test_zero_ideal_allowed():
    I, _ = minimalize(3, [])
    assert I.is_zero()
    assert not contains(I, (1, 0, 0))


def test_contains():
    assert contains(SQ, (2, 0))
    assert contains(SQ, (5, 3))
    assert not contains(SQ, (1, 0))
    assert not contains(SQ, (0, 0))
    with pytest.raises(LaurentError):
        contains(SQ, (2, -1))


def test_is_stable_examples():
    assert is_stable(SQ).ok
    bad = ideal(2, [(1, 1)])
    res = is_stable(bad)
    assert not res.ok
    assert res.witness == ((1, 1), 1)
    assert is_stable(ideal(1, [(3,)])).ok
    assert is_stable(ideal(3, [(1, 0, 0)])).ok
    with pytest.raises(NotStableError) as exc:
        require_stable(bad)
    assert exc.value.witness == ((1, 1), 1)


def test_stability_matches_exhaustive_member_check():
    """The generator-only shortcut agrees with checking every member."""
    candidates = [
        SQ,
        ideal(2, [(1, 1)]),
        ideal(3, [(0, 1, 0)]),
        ideal(3, [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1)]),
        random_stable_ideal(3, seed=1, gen_count=2, deg_cap=3),
        random_stable_ideal(4, seed=2, gen_count=2, deg_cap=3),
    ]
    for I in candidates:
        bound = I.max_gen_degree() + 3
        exhaustive = True
        for w in monomials_up_to_degree(I, bound):
            m = max_index(w)
            shifted = quotient(w, variable(I.n, m))
            for i in range(1, m):
                if not contains(I, star(variable(I.n, i), shifted)):
                    exhaustive = False
        assert is_stable(I).ok == exhaustive


def test_decompose_frozen_examples():
    assert decompose(SQ, (2, 2)) == ((2, 0), (0, 2))
    assert decompose(SQ, (1, 2)) == ((1, 1), (0, 1))
    assert decompose(SQ, (1, 1)) == ((1, 1), (0, 0))


def test_decompose_errors():
    with pytest.raises(NotInIdealError):
        decompose(SQ, (1, 0))
    with pytest.raises(NotStableError):
        decompose(ideal(2, [(1, 1)]), (1, 1))


def test_decompose_head_is_unique():
    """Scanning all generators finds exactly one valid factorization."""
    for I in (SQ, random_stable_ideal(3, seed=9, gen_count=2, deg_cap=4)):
        for w in monomials_up_to_degree(I, I.max_gen_degree() + 3):
            candidates = [
                g
                for g in I.generators
                if divides(g, w)
                and (is_unit(quotient(w, g)) or max_index(g) <= min_index(quotient(w, g)))
            ]
            assert len(candidates) == 1
            assert decompose(I, w).head == candidates[0]


def test_decomposition_function_laws():
    """Multiplying a member by variables interacts with the head as claimed:
    the head of v*w divides v*g(w), and heads are reached stepwise."""
    rng = random.Random(31)
    for I in (SQ, random_stable_ideal(3, seed=4, gen_count=2, deg_cap=3)):
        members = monomials_up_to_degree(I, I.max_gen_degree() + 2)
        for w in members:
            head, tail = decompose(I, w)
            assert star(head, tail) == w
            assert is_unit(tail) or max_index(head) <= min_index(tail)
            # g(w) is a fixed point
            assert decompose(I, head) == (head, (0,) * I.n)
            for _ in range(3):
                v = tuple(rng.randint(0, 2) for _ in range(I.n))
                assert divides(decompose(I, star(v, w)).head, star(v, head))


def test_decomposition_cost_is_trivial():
    """Reordering the canonical factorization costs nothing: the head only
    uses variables up to max_index, the tail only variables from it on."""
    for I in (SQ, random_stable_ideal(4, seed=12, gen_count=2, deg_cap=4)):
        for w in monomials_up_to_degree(I, I.max_gen_degree() + 2):
            assert decomposition_cost(I, w) == Scalar.one()
            head, tail = decompose(I, w)
            assert bichar_c(head, tail) == Scalar.one()


def test_monomials_up_to_degree():
    members = monomials_up_to_degree(SQ, 3)
    assert members == [(2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)]
    I = ideal(1, [(1,)])
    assert monomials_up_to_degree(I, 3) == [(1,), (2,), (3,)]


def test_stable_closure():
    I = stable_closure(2, [(1, 1)])
    assert I.generators == ((2, 0), (1, 1))
    # closing the closure changes nothing
    assert stable_closure(2, I.generators) == I
    # a pure power of the last variable pulls in the whole degree slice
    assert stable_closure(2, [(0, 2)]).generators == ((2, 0), (1, 1), (0, 2))
    assert is_stable(stable_closure(4, [(0, 1, 2, 1)])).ok


def test_stable_closure_preserves_degrees():
    for seed in range(10):
        I = random_stable_ideal(4, seed=seed, gen_count=3, deg_cap=5)
        assert all(1 <= degree(g) <= 5 for g in I.generators)
        assert is_stable(I).ok


def test_ideal_json_round_trip():
    blob = ideal_to_json(SQ)
    assert blob == {"schema": 1, "n": 2, "generators": [[2, 0], [1, 1], [0, 2]]}
    I, removed = ideal_from_json(blob)
    assert I == SQ and removed == []
    I2, removed2 = ideal_from_json({"n": 2, "generators": [[2, 0], [3, 1]]})
    assert I2.generators == ((2, 0),)
    assert removed2 == [(3, 1)]
