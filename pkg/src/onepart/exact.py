"""Exact rational scalars and Bernoulli-type number theory.

``Rational`` is :class:`fractions.Fraction`; it is always normalised, so
equality tests in the verification suites are plain ``==``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

Rational = Fraction

__all__ = [
    "Rational",
    "bernoulli_number",
    "bernoulli_plus",
    "bernoulli_poly",
    "faulhaber",
    "power_sum_range",
    "fmt",
    "parse_rational",
]


@lru_cache(maxsize=None)
def bernoulli_number(m: int) -> Fraction:
    """B_m with the convention B_1 = -1/2.

    Uses sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1; results are memoised so
    the table grows lazily with the largest index requested.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return Fraction(1)
    if m >= 3 and m % 2:
        return Fraction(0)
    s = sum((comb(m + 1, k) * bernoulli_number(k) for k in range(m)), Fraction(0))
    return -s / (m + 1)


def bernoulli_plus(m: int) -> Fraction:
    """Bernoulli numbers with B_1 = +1/2, i.e. the coefficients of x/(1 - e^-x)."""
    if m == 1:
        return Fraction(1, 2)
    return bernoulli_number(m)


def bernoulli_poly(m: int, x) -> Fraction:
    """B_m(x) = sum_k C(m, k) B_k x^(m-k)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    x = Fraction(x)
    return sum((comb(m, k) * bernoulli_number(k) * x ** (m - k) for k in range(m + 1)), Fraction(0))


def faulhaber(two_g: int, N: int) -> Fraction:
    """(1/(2g)!) * (1^(2g) + ... + N^(2g)) from the Bernoulli closed form.

    sum_{k=0}^{2g} B_k^+ / k! * N^(2g+1-k) / (2g+1-k)!
    """
    if two_g < 2 or two_g % 2:
        raise ValueError("two_g must be an even integer >= 2")
    if N < 0:
        raise ValueError("N must be >= 0")
    return sum(
        (
            bernoulli_plus(k) / factorial(k) * Fraction(N ** (two_g + 1 - k), factorial(two_g + 1 - k))
            for k in range(two_g + 1)
        ),
        Fraction(0),
    )


def power_sum_range(k: int, values) -> Fraction:
    """Literal sum of v**k over ``values``; the oracle for :func:`faulhaber`."""
    return sum((Fraction(v) ** k for v in values), Fraction(0))


def fmt(x) -> str:
    """Serialise a rational as ``"p/q"``, or ``"n"`` when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
