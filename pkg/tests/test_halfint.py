from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from schurmin.halfint import HalfInt

halfints = st.integers(-10**6, 10**6).map(HalfInt)


def test_str_and_value():
    assert str(HalfInt(-1)) == "-1/2"
    assert str(HalfInt(4)) == "2"
    assert float(HalfInt(3)) == 1.5
    assert HalfInt.of(Fraction(-3, 2)).doubled == -3


def test_rejects_thirds():
    with pytest.raises(ValueError):
        HalfInt.of(Fraction(1, 3))


def test_mixed_comparisons():
    assert HalfInt(1) < 1
    assert HalfInt(2) == 1
    assert HalfInt(1) == Fraction(1, 2)
    assert HalfInt(-2) <= -1
    assert {HalfInt(2), 1} == {1}


@given(halfints, halfints)
def test_arithmetic_is_exact(a, b):
    assert (a + b).to_fraction() == a.to_fraction() + b.to_fraction()
    assert (a - b).to_fraction() == a.to_fraction() - b.to_fraction()
    assert (a < b) == (a.to_fraction() < b.to_fraction())
    assert -(-a) == a
    assert 3 * a == a + a + a
