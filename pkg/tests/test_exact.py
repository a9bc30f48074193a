from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from onepart.exact import (
    bernoulli_number,
    bernoulli_plus,
    bernoulli_poly,
    faulhaber,
    fmt,
    parse_rational,
    power_sum_range,
)


def test_bernoulli_numbers():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(12) == Fraction(-691, 2730)
    assert all(bernoulli_number(m) == 0 for m in range(3, 30, 2))


def test_bernoulli_plus():
    assert bernoulli_plus(1) == Fraction(1, 2)
    assert bernoulli_plus(2) == Fraction(1, 6)
    assert bernoulli_plus(3) == 0


def test_bernoulli_poly_values():
    assert bernoulli_poly(2, 1) == Fraction(1, 6)
    # B_2((d-1)/d) at d = 3, the psi coefficient of the degree-1 Chiodo class
    assert bernoulli_poly(2, Fraction(2, 3)) == Fraction(-1, 18)
    for m in range(13):
        assert bernoulli_poly(m, 0) == bernoulli_number(m)
        assert bernoulli_poly(m, 1) == bernoulli_plus(m)


@given(st.integers(0, 12), st.fractions(min_value=-3, max_value=3, max_denominator=12))
def test_bernoulli_reflection(m, x):
    assert bernoulli_poly(m, 1 - x) == (-1) ** m * bernoulli_poly(m, x)


def test_faulhaber_examples():
    assert faulhaber(2, 3) == 7
    assert faulhaber(2, 0) == 0
    assert faulhaber(4, 5) == Fraction(979, 24)


def test_faulhaber_matches_power_sums():
    from math import factorial

    for g in range(1, 9):
        for N in range(31):
            assert faulhaber(2 * g, N) * factorial(2 * g) == power_sum_range(2 * g, range(1, N + 1))


@pytest.mark.parametrize("two_g", [0, 3, -2])
def test_faulhaber_rejects_bad_exponent(two_g):
    with pytest.raises(ValueError):
        faulhaber(two_g, 4)


def test_fmt_roundtrip():
    for x in [Fraction(0), Fraction(5), Fraction(-7, 3), Fraction(15625, 16)]:
        assert parse_rational(fmt(x)) == x
    assert fmt(Fraction(4, 2)) == "2"
    assert fmt(Fraction(-1, 24)) == "-1/24"
