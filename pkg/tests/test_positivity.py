from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toric_hodge.divisors import DivisorClass, TDivisor, principal_divisor
from toric_hodge.errors import ContractError
from toric_hodge.fan import Fan, projective_product
from toric_hodge.positivity import cartier_data, is_ample, is_nef, nef_rays


def test_zero_functionals(P2):
    data = cartier_data(P2, TDivisor.zero(3))
    assert all(all(x == 0 for x in m) for m in data.functionals)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_principal_functionals(m):
    fan = projective_product(2, 1)
    data = cartier_data(fan, principal_divisor(fan, m))
    assert all(list(f) == [-x for x in m] for f in data.functionals)


def test_hirzebruch_cones(Fr):
    for a, b in product(range(-2, 4), repeat=2):
        assert is_nef(Fr, DivisorClass((a, b))) == (a >= 0 and b >= 0)
        assert is_ample(Fr, DivisorClass((a, b))) == (a > 0 and b > 0)
    r = Fr.params[0]
    assert nef_rays(Fr) == (True, r == 0, True, True)


def test_p2p1_cones(P2P1):
    for a, b in product(range(-2, 3), repeat=2):
        assert is_ample(P2P1, DivisorClass((a, b))) == (a > 0 and b > 0)


def test_pn_degrees(P3):
    for t in range(-2, 3):
        assert is_ample(P3, DivisorClass((t,))) == (t > 0)
        assert is_nef(P3, DivisorClass((t,))) == (t >= 0)


def test_ample_implies_nef(P2P1):
    for coeffs in product(range(-1, 2), repeat=5):
        D = TDivisor.of(coeffs)
        if is_ample(P2P1, D):
            assert is_nef(P2P1, D)


def test_incomplete_rejected():
    with pytest.raises(ContractError):
        is_nef(Fan(((1, 0), (0, 1)), ((0, 1),)), TDivisor.zero(2))
