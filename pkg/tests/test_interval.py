from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfplumb.interval import RationalEnclosure, decimal_string, sqrt_bounds

fractions = st.fractions(min_value=-100, max_value=100, max_denominator=1000)


@st.composite
def enclosures(draw):
    a, b = draw(fractions), draw(fractions)
    return RationalEnclosure(min(a, b), max(a, b))


def test_empty_rejected():
    with pytest.raises(ValueError):
        RationalEnclosure(2, 1)


def test_floats_rejected():
    with pytest.raises(TypeError):
        RationalEnclosure(0.5, 1)


@given(enclosures(), enclosures(), st.floats(0, 1), st.floats(0, 1))
def test_arithmetic_inclusion(x, y, s, t):
    a = x.lo + Fraction(s) * x.width
    b = y.lo + Fraction(t) * y.width
    assert a + b in x + y
    assert a - b in x - y
    assert a * b in x * y
    assert a * a in x.square()
    if not (y.lo <= 0 <= y.hi):
        assert a / b in x / y


def test_reciprocal_of_zero_straddling():
    with pytest.raises(ZeroDivisionError):
        RationalEnclosure(-1, 1).reciprocal()


@given(st.fractions(min_value=0, max_value=10 ** 6, max_denominator=10 ** 6), st.integers(1, 120))
def test_sqrt_bounds(x, bits):
    lo, hi = sqrt_bounds(x, bits)
    assert lo * lo <= x <= hi * hi
    assert hi - lo <= Fraction(1, 2 ** bits)


def test_sqrt_exact_square():
    assert sqrt_bounds(Fraction(9, 4), 10) == (Fraction(3, 2), Fraction(3, 2))


def test_contains_and_ordering():
    e = RationalEnclosure(1, 2)
    assert Fraction(3, 2) in e and 3 not in e
    assert RationalEnclosure(Fraction(5, 4), Fraction(7, 4)) in e
    assert e.strictly_below(RationalEnclosure(3, 4))
    assert e.overlaps(RationalEnclosure(2, 5))


def test_decimal_rounding_is_outward():
    e = RationalEnclosure(Fraction(1, 3), Fraction(2, 3))
    lo, hi = e.decimal(5)
    assert lo == "0.33333" and hi == "0.66667"
    assert decimal_string(Fraction(-1, 3), 3) == "-0.334"
