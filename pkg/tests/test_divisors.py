from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toric_hodge.divisors import (DivisorClass, TDivisor, boundary_divisor, canonical_divisor,
                                  class_of, linearly_equivalent, picard_group,
                                  principal_divisor, reduce, representative)
from toric_hodge.errors import ContractError
from toric_hodge.fan import Fan, projective_space


def test_p2_classes(P2):
    pres = picard_group(P2)
    assert pres.rank == 1
    assert len({class_of(P2, TDivisor.prime(3, i)) for i in range(3)}) == 1


def test_hirzebruch_relation(Fr):
    r = Fr.params[0]
    F = class_of(Fr, TDivisor.prime(4, 0))
    Ep = class_of(Fr, TDivisor.prime(4, 1))
    E = class_of(Fr, TDivisor.prime(4, 3))
    assert F == DivisorClass((1, 0)) and E == DivisorClass((0, 1))
    assert E == Ep + F * r
    assert class_of(Fr, TDivisor.prime(4, 2)) == F


def test_p1xp1_classes(P1P1):
    assert picard_group(P1P1).classes_of_rays() == [(1, 0), (1, 0), (0, 1), (0, 1)]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=2, max_size=2), st.integers(0, 3))
def test_principal_is_trivial(m, r):
    from toric_hodge.fan import hirzebruch
    fan = hirzebruch(r)
    assert class_of(fan, principal_divisor(fan, m)).is_zero()


def test_canonical(P1P1):
    assert class_of(projective_space(3), canonical_divisor(projective_space(3))) == DivisorClass((-4,))
    assert class_of(P1P1, canonical_divisor(P1P1)) == DivisorClass((-2, -2))
    assert canonical_divisor(P1P1) == -boundary_divisor(P1P1)


def test_reduce():
    assert reduce(TDivisor.of(["1/2", 0, "3/2"])) == TDivisor.of([1, 0, 1])
    D = TDivisor.of([1, 0, 1])
    assert reduce(D) == D
    assert reduce(TDivisor.zero(3)) == TDivisor.zero(3)
    with pytest.raises(ContractError):
        reduce(TDivisor.of([1, -1, 0]))


def test_representative_roundtrip(P2P1):
    cls = DivisorClass((Fraction(3, 2), -2))
    D = representative(P2P1, cls)
    assert class_of(P2P1, D) == cls
    assert linearly_equivalent(P2P1, D, cls)


def test_non_smooth_rejected():
    fan = Fan(((1, 0), (1, 2), (-1, -1)), ((0, 1), (1, 2), (0, 2)))
    with pytest.raises(ContractError):
        picard_group(fan)
