from itertools import product

import pytest

from toric_hodge.applications import (independent_conditions_system, jet_separation_system,
                                      k_floor, k_mj, mult_containment)
from toric_hodge.divisors import DivisorClass, TDivisor, boundary_divisor, class_of
from toric_hodge.errors import BranchError, ParameterError
from toric_hodge.fan import hirzebruch, projective_space


def test_k_floor():
    assert k_floor(3, 2) == 1
    assert k_floor(2, 2) == 1
    assert k_floor(4, 3) == 1
    with pytest.raises(ParameterError):
        k_floor(3, 0)


def test_k_mj():
    assert k_mj(3, 3, 2) == 1
    assert k_mj(3, 3, 3) == 3
    assert k_mj(4, 4, 1) == 1
    with pytest.raises(ParameterError):
        k_mj(3, 2, 1)


def test_k_mj_monotone_in_j():
    for n, m in product(range(2, 7), range(3, 7)):
        values = [k_mj(n, m, j) for j in range(1, 10)]
        assert values == sorted(values)


def test_k_mj_agrees_with_k_floor():
    # separating 0-jets is imposing independent conditions
    for m, n in product(range(3, 7), range(2, 7)):
        if m <= n:
            assert k_mj(n, m, 1) <= k_floor(n, m)


def test_containment():
    c = mult_containment(3, 2, 1)
    assert (c.exponent, c.branch) == (1, "first")
    c = mult_containment(2, 2, 1)
    assert (c.exponent, c.branch) == (1, "second")
    with pytest.raises(BranchError):
        mult_containment(4, 2, 1)  # m = n/(k+1)


def test_containment_positive():
    for n, m, k in product(range(2, 7), range(2, 7), range(0, 5)):
        try:
            assert mult_containment(n, m, k).exponent >= 1
        except BranchError:
            pass


def test_conditions_p2xp1(P2P1):
    for c, d in product(range(1, 4), repeat=2):
        res = independent_conditions_system(P2P1, DivisorClass((c, d)), 2, DivisorClass((1, 1)))
        assert res.k == 1 and res.precondition_met
        assert res.system_class == DivisorClass((2 * c - 2, 2 * d - 1))


def test_conditions_hirzebruch(Fr):
    r = Fr.params[0]
    res = independent_conditions_system(Fr, DivisorClass((1, 2)), 2, DivisorClass((r, 1)))
    assert res.system_class == DivisorClass((2 * (1 + r) - 2, 3))
    # with a = k*r the quick bound is met but P_1 is not
    assert not res.precondition_met


def test_p3_comparison(P3):
    res = independent_conditions_system(P3, DivisorClass((6,)), 2, DivisorClass((1,)))
    assert res.k == 1
    assert res.system_class == DivisorClass((2 * 6 - 4 + 1,))
    assert any("degree >= 7" in line for line in res.comparisons)


def test_jets_p3(P3):
    res = jet_separation_system(P3, DivisorClass((5,)), 3, 3, DivisorClass((1,)))
    assert res.k == 3
    assert res.system_class == DivisorClass((4 * 5 - 4 + 1,))


def test_boundary_divisor_system():
    fan = hirzebruch(1)
    B = boundary_divisor(fan)
    L = DivisorClass((3, 1))
    res = jet_separation_system(fan, B, 3, 2, L)
    assert res.system_class == class_of(fan, B) * res.k + L


def test_nonreduced_rejected(P2):
    with pytest.raises(ParameterError):
        independent_conditions_system(P2, TDivisor.of([2, 0, 0]), 2, DivisorClass((3,)))
