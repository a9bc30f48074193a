"""Truncated formal power series with exact rational coefficients.

Every series carries an explicit truncation order. Coefficients above the
cap are unknown, so asking for them raises instead of returning zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Dict, Iterable, Sequence, Tuple

__all__ = ["Series1", "SeriesN", "s_kernel", "invert"]


class TruncationError(ValueError):
    """Requested a coefficient beyond the truncation order."""


@dataclass(frozen=True)
class Series1:
    """Univariate series sum_{k<=cap} coeffs[k] t^k."""

    coeffs: Tuple[Fraction, ...]
    cap: int

    def __post_init__(self):
        if self.cap < 0:
            raise ValueError("cap must be >= 0")
        c = tuple(Fraction(x) for x in self.coeffs[: self.cap + 1])
        c = c + (Fraction(0),) * (self.cap + 1 - len(c))
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def constant(cls, value, cap: int) -> "Series1":
        return cls((Fraction(value),), cap)

    @classmethod
    def monomial(cls, k: int, cap: int, value=1) -> "Series1":
        c = [Fraction(0)] * (cap + 1)
        if k <= cap:
            c[k] = Fraction(value)
        return cls(tuple(c), cap)

    def coeff(self, k: int) -> Fraction:
        if k < 0:
            return Fraction(0)
        if k > self.cap:
            raise TruncationError(f"degree {k} exceeds truncation order {self.cap}")
        return self.coeffs[k]

    def truncate(self, cap: int) -> "Series1":
        if cap > self.cap:
            raise TruncationError(f"cannot extend cap {self.cap} to {cap}")
        return Series1(self.coeffs, cap)

    def __add__(self, other):
        if not isinstance(other, Series1):
            other = Series1.constant(other, self.cap)
        cap = min(self.cap, other.cap)
        return Series1(tuple(self.coeffs[k] + other.coeffs[k] for k in range(cap + 1)), cap)

    __radd__ = __add__

    def __neg__(self):
        return Series1(tuple(-c for c in self.coeffs), self.cap)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Series1):
            k = Fraction(other)
            return Series1(tuple(k * c for c in self.coeffs), self.cap)
        cap = min(self.cap, other.cap)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (cap + 1)
        for i in range(cap + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(cap + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        return Series1(tuple(out), cap)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return invert(self) ** (-e)
        result = Series1.constant(1, self.cap)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "Series1":
        """Multiply by t^k, keeping the same cap."""
        c = [Fraction(0)] * k + list(self.coeffs)
        return Series1(tuple(c[: self.cap + 1]), self.cap)

    def rescale(self, a) -> "Series1":
        """Substitute t -> a*t."""
        a = Fraction(a)
        return Series1(tuple(c * a**k for k, c in enumerate(self.coeffs)), self.cap)


def invert(s: Series1) -> Series1:
    """Multiplicative inverse through the same cap."""
    a0 = s.coeffs[0]
    if a0 == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    out = [Fraction(0)] * (s.cap + 1)
    out[0] = 1 / a0
    for k in range(1, s.cap + 1):
        acc = sum((s.coeffs[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
        out[k] = -acc / a0
    return Series1(tuple(out), s.cap)


def s_kernel(scale, cap: int) -> Series1:
    """S(scale*t) with S(x) = sinh(x/2)/(x/2) = sum x^(2k) / (4^k (2k+1)!)."""
    if cap < 0:
        raise ValueError("cap must be >= 0")
    scale = Fraction(scale)
    c = [Fraction(0)] * (cap + 1)
    for k in range(cap // 2 + 1):
        c[2 * k] = scale ** (2 * k) / (4**k * factorial(2 * k + 1))
    return Series1(tuple(c), cap)


Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class SeriesN:
    """Sparse multivariate series, truncated per variable.

    ``terms`` maps exponent vectors to nonzero coefficients; ``caps[i]`` is
    the largest exponent kept for variable i.
    """

    terms: Dict[Exponent, Fraction]
    caps: Tuple[int, ...]

    def __post_init__(self):
        caps = tuple(self.caps)
        object.__setattr__(self, "caps", caps)
        clean = {}
        for e, c in self.terms.items():
            e = tuple(e)
            if len(e) != len(caps):
                raise ValueError("exponent vector length does not match variable count")
            if c and all(x <= m for x, m in zip(e, caps)):
                clean[e] = Fraction(c)
        object.__setattr__(self, "terms", clean)

    @property
    def nvars(self) -> int:
        return len(self.caps)

    @classmethod
    def one(cls, caps: Sequence[int]) -> "SeriesN":
        return cls({(0,) * len(caps): Fraction(1)}, tuple(caps))

    @classmethod
    def from_univariate(cls, s: Series1, var: int, caps: Sequence[int]) -> "SeriesN":
        """Embed s(z_var)."""
        caps = tuple(caps)
        terms = {}
        for k in range(min(s.cap, caps[var]) + 1):
            if s.coeffs[k]:
                e = [0] * len(caps)
                e[var] = k
                terms[tuple(e)] = s.coeffs[k]
        if caps[var] > s.cap:
            raise TruncationError("univariate factor truncated below the variable cap")
        return cls(terms, caps)

    @classmethod
    def compose_sum(cls, s: Series1, caps: Sequence[int]) -> "SeriesN":
        """s(z_1 + ... + z_b), expanded multinomially and truncated to ``caps``."""
        caps = tuple(caps)
        if s.cap < sum(caps):
            raise TruncationError("univariate series must reach the total degree of the caps")
        terms: Dict[Exponent, Fraction] = {}
        for e in product(*(range(m + 1) for m in caps)):
            K = sum(e)
            c = s.coeffs[K]
            if not c:
                continue
            multinom = factorial(K)
            for x in e:
                multinom //= factorial(x)
            terms[e] = c * multinom
        return cls(terms, caps)

    def __mul__(self, other):
        if not isinstance(other, SeriesN):
            k = Fraction(other)
            return SeriesN({e: k * c for e, c in self.terms.items()}, self.caps)
        if other.caps != self.caps:
            raise ValueError("caps differ")
        caps = self.caps
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if any(x > m for x, m in zip(e, caps)):
                    continue
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return SeriesN(out, caps)

    __rmul__ = __mul__

    def multi_extract(self, exponents: Iterable[int]) -> Fraction:
        e = tuple(exponents)
        if len(e) != self.nvars:
            raise ValueError("exponent vector length does not match variable count")
        if any(x > m for x, m in zip(e, self.caps)):
            raise TruncationError(f"exponent {e} exceeds caps {self.caps}")
        return self.terms.get(e, Fraction(0))


def multi_extract(s: SeriesN, exponents: Iterable[int]) -> Fraction:
    return s.multi_extract(exponents)


def coeff(s: Series1, k: int) -> Fraction:
    return s.coeff(k)
