from fractions import Fraction

import pytest

from skewek.commutation import FieldSpecialization, Scalar
from skewek.errors import SkewekError
from skewek.families import power_of_maximal_ideal, random_stable_ideal, s_n_ideal
from skewek.homology import (
    check_exactness,
    component_basis,
    rank_exact,
    rank_mod_p,
    report_to_json,
)
from skewek.ideal import ideal
from skewek.resolution import FreeComplex, Symbol, Term, build_resolution

SQ = ideal(2, [(2, 0), (1, 1), (0, 2)])
ONE = Scalar.one()


def test_rank_mod_p():
    assert rank_mod_p([], 7) == 0
    assert rank_mod_p([[0, 0], [0, 0]], 7) == 0
    assert rank_mod_p([[1, 2], [2, 4]], 7) == 1
    assert rank_mod_p([[1, 2], [2, 4]], 3) == 1
    assert rank_mod_p([[1, 2], [2, 5]], 7) == 2
    # the entry 7 vanishes mod 7 but not mod 5
    assert rank_mod_p([[7, 0], [0, 1]], 7) == 1
    assert rank_mod_p([[7, 0], [0, 1]], 5) == 2


def test_rank_exact():
    assert rank_exact([]) == 0
    f = Fraction
    assert rank_exact([[f(1, 2), f(1, 3)], [f(3, 2), f(1, 1)]]) == 1
    assert rank_exact([[f(1, 2), f(1, 3)], [f(3, 2), f(2, 1)]]) == 2
    assert rank_exact([[f(0), f(0)], [f(0), f(5)]]) == 1


def test_component_basis_frozen():
    assert component_basis(SQ, 0, (1, 1)) == [
        Term(ONE, (0, 0), Symbol((), (1, 1)))
    ]
    assert component_basis(SQ, 0, (2, 1)) == [
        Term(ONE, (0, 1), Symbol((), (2, 0))),
        Term(ONE, (1, 0), Symbol((), (1, 1))),
    ]
    assert component_basis(SQ, 1, (1, 1)) == []
    assert component_basis(SQ, 1, (2, 2)) == [
        Term(ONE, (0, 1), Symbol((1,), (1, 1))),
        Term(ONE, (1, 0), Symbol((1,), (0, 2))),
    ]
    assert component_basis(SQ, 0, (1, 0)) == []


def test_exactness_golden_mod_p():
    phi = FieldSpecialization.from_values(2, {(1, 2): 3}, field_name="Fp", prime=101)
    rep = check_exactness(SQ, phi, bound=(4, 4))
    assert rep.ok
    assert rep.field == "Fp" and rep.prime == 101
    assert rep.multidegrees_checked == 25
    assert rep.bound == (4, 4)
    assert rep.homology[(2, 2)] == (0, 0)
    assert all(h == 0 for dims in rep.homology.values() for h in dims)
    # members only appear in the homology table
    assert (1, 0) not in rep.homology
    assert (2, 0) in rep.homology


def test_exactness_rational_and_all_ones():
    phi_q = FieldSpecialization.from_values(2, {(1, 2): Fraction(5, 7)})
    assert check_exactness(SQ, phi_q, bound=(3, 3)).ok
    assert check_exactness(SQ, FieldSpecialization.all_ones(2), bound=(3, 3)).ok


def test_exactness_default_bound():
    rep = check_exactness(SQ, FieldSpecialization.random_mod_p(2, 1009, seed=4))
    assert rep.ok
    assert rep.bound == (4, 4)
    assert rep.multidegrees_checked == 25


def test_exactness_various_ideals():
    for I, seed in [
        (power_of_maximal_ideal(3, 2), 1),
        (s_n_ideal(3), 2),
        (ideal(3, [(0, 0, 3), (1, 0, 2), (0, 1, 2), (2, 0, 0), (1, 1, 0), (0, 2, 0)]), 3),
        (random_stable_ideal(3, seed=17, gen_count=2, deg_cap=3), 4),
    ]:
        phi = FieldSpecialization.random_mod_p(I.n, 1000003, seed=seed)
        assert check_exactness(I, phi).ok


def test_exactness_dimension_mismatch():
    phi = FieldSpecialization.all_ones(3)
    with pytest.raises(SkewekError):
        check_exactness(SQ, phi)
    with pytest.raises(SkewekError):
        check_exactness(SQ, FieldSpecialization.all_ones(2), bound=(1, 2, 3))
    with pytest.raises(SkewekError):
        check_exactness(SQ, FieldSpecialization.all_ones(2), bound=(-1, 2))


def test_exactness_catches_mutations():
    cx = build_resolution(SQ)
    phi = FieldSpecialization.random_mod_p(2, 101, seed=9)
    # zero out one column of the matrix: homology appears at spot 1
    mat = {k: v for k, v in cx.matrices[0].items() if k[1] != 0}
    broken = FreeComplex(cx.ideal, cx.bases, (mat,))
    rep = check_exactness(SQ, phi, bound=(4, 4), cx=broken)
    assert not rep.ok
    assert rep.violations
    assert any("homology" in msg for _, msg in rep.violations)
    # dropping a whole basis symbol breaks the Euler characteristic
    bases = (cx.bases[0], cx.bases[1][:1])
    mat = {k: v for k, v in cx.matrices[0].items() if k[1] == 0}
    rep = check_exactness(SQ, phi, bound=(4, 4), cx=FreeComplex(cx.ideal, bases, (mat,)))
    assert not rep.ok
    assert any("Euler" in msg for _, msg in rep.violations)


def test_report_to_json():
    phi = FieldSpecialization.all_ones(2)
    rep = check_exactness(SQ, phi, bound=(2, 2))
    blob = report_to_json(rep)
    assert blob == {
        "schema": 1,
        "ok": True,
        "field": "Q",
        "prime": None,
        "bound": [2, 2],
        "multidegrees_checked": 9,
        "violations": [],
    }
