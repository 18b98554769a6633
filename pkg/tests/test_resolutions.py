from math import comb

import pytest

from toric_hodge.cohomology import cohomology_dims
from toric_hodge.divisors import DivisorClass, class_of
from toric_hodge.errors import ParameterError
from toric_hodge.fan import projective_product, projective_space
from toric_hodge.resolutions import (bott_dims, en_terms, euler_check, koszul_omega_terms,
                                     rank_check)


def test_en_examples():
    assert [t.rank for t in en_terms(3, 1, 1).terms] == [3, 1]
    assert en_terms(4, 2, 1).alternating_rank == 2
    for e, f in ((3, 1), (5, 2), (6, 4)):
        assert en_terms(e, f, 0).alternating_rank == 1


@pytest.mark.parametrize("e", range(2, 9))
def test_en_rank_identity(e):
    for f in range(1, e):
        for p in range(e - f + 1):
            assert en_terms(e, f, p).alternating_rank == comb(e - f, p)


def test_en_bad_params():
    with pytest.raises(ParameterError):
        en_terms(3, 3, 0)
    with pytest.raises(ParameterError):
        en_terms(4, 1, 4)


def test_p2_omega1(P2):
    res = koszul_omega_terms(P2, 1)
    assert [t.multiplicity for t in res.terms] == [1, 1]
    assert [class_of(P2, D) for D in res.terms[0].summands] == [DivisorClass((-2,))] * 3
    assert [class_of(P2, D) for D in res.terms[1].summands] == [DivisorClass((-3,))]
    assert res.to_json(P2)["ranks"] == [3, 1]


def test_top_degree(P2P1):
    res = koszul_omega_terms(P2P1, 3)
    assert len(res.terms) == 1 and len(res.terms[0].summands) == 1
    assert res.terms[0].multiplicity == 1


def test_rank_checks(P1P1, P3, Fr):
    assert rank_check(koszul_omega_terms(P1P1, 0), 2, 0)
    assert rank_check(koszul_omega_terms(P3, 2), 3, 2)
    assert rank_check(koszul_omega_terms(Fr, 1), 2, 1)


def test_euler_examples(P2, P3):
    rep = euler_check(P2, 1)
    assert (rep.lhs, rep.rhs) == (-1, -1) and rep.passed
    rep = euler_check(P3, 2)
    assert rep.passed and rep.lhs == 1
    assert euler_check(P2, 1, DivisorClass((3,)), oracle="Pn_bott").passed


def test_euler_products():
    for fan in (projective_product(1, 2), projective_product(2, 2)):
        for p in range(fan.dim + 1):
            assert euler_check(fan, p).passed


def test_bott_against_euler_sequence():
    # h^0(P^n, Omega^1(t)) from 0 -> Omega^1(t) -> O(t-1)^(n+1) -> O(t) -> 0 for t >= 2
    for n in (2, 3):
        fan = projective_space(n)
        for t in range(2, 5):
            h = (n + 1) * cohomology_dims(fan, DivisorClass((t - 1,))).dims[0] \
                - cohomology_dims(fan, DivisorClass((t,))).dims[0]
            assert bott_dims(n, 1, t)[0] == h


def test_oracle_guards(P1P1, P2):
    with pytest.raises(ParameterError):
        euler_check(P1P1, 1, DivisorClass((1, 0)), oracle="Pn_bott")
    with pytest.raises(ParameterError):
        euler_check(P2, 1, DivisorClass((1,)), oracle="hodge_diagonal")
    with pytest.raises(ParameterError):
        euler_check(P2, 1, oracle="nope")
    with pytest.raises(ParameterError):
        koszul_omega_terms(P2, 3)
