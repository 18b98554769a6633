from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from toric_hodge.errors import ParameterError
from toric_hodge.exact import (adjugate, as_fraction, det, format_fraction, int_det,
                               inverse, primitive_kernel_vector, rank, smith_invariants)

small = st.integers(-6, 6)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


def test_as_fraction_forms():
    assert as_fraction("3/4") == Fraction(3, 4)
    assert as_fraction(2) == 2
    assert format_fraction(Fraction(4, 2)) == 2
    assert format_fraction(Fraction(1, 3)) == "1/3"
    with pytest.raises(ParameterError):
        as_fraction(True)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(square))
def test_det_rank_match_sympy(rows):
    M = sympy.Matrix(rows)
    assert det(rows) == M.det()
    assert int_det(rows) == M.det()
    assert rank(rows) == M.rank()


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(square))
def test_inverse_and_adjugate(rows):
    d = det(rows)
    if d == 0:
        return
    inv = inverse(rows)
    n = len(rows)
    prod = [[sum(Fraction(rows[i][k]) * inv[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]
    assert prod == [[int(i == j) for j in range(n)] for i in range(n)]
    adj = adjugate(rows)
    assert [[Fraction(x) for x in r] for r in adj] == [[x * d for x in r] for r in inv]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))))
def test_smith_invariants_match_sympy(rows):
    from sympy.matrices.normalforms import invariant_factors
    expected = [abs(int(x)) for x in invariant_factors(sympy.Matrix(rows), domain=sympy.ZZ)]
    expected = [x for x in expected if x != 0]
    got = [x for x in smith_invariants(rows) if x != 0]
    assert got == expected


def test_primitive_kernel_vector():
    with pytest.raises(ParameterError):
        primitive_kernel_vector([[2, 4, 0]])
    v = primitive_kernel_vector([[1, 1, 0], [0, 2, 2]])
    assert v is not None and sum(a * b for a, b in zip(v, (1, 1, 0))) == 0
    from math import gcd
    assert gcd(*v) == 1
    assert primitive_kernel_vector([[1, 2, 3], [2, 4, 6]]) is None
