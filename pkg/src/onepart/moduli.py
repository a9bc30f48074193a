"""Exact intersection numbers on moduli spaces of curves.

All integrals are returned as Fractions; no cohomology ring is modelled.
Notation: D = 3g - 3 + n is the dimension of the moduli space of genus g
curves with n marked points, and

    F(x, w) = integral of Chiodo^{[x]} / prod_i (1 - w_i psi_i)

is homogeneous of degree D under (x, w) -> (lam x, lam w).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, List, Sequence, Tuple

from .exact import bernoulli_poly, faulhaber, power_sum_range
from .hurwitz import spin_extraction, spin_b
from .partitions import Partition, elementary_symmetric
from .series import s_kernel

__all__ = [
    "PsiQuery",
    "PsiCalculator",
    "psi_genus0",
    "psi_dvv",
    "genus1_weighted",
    "weighted_psi",
    "unstable_psi",
    "linear_hodge",
    "ChiodoSpec",
    "Degree1ChiodoData",
    "chiodo_ch1",
    "chiodo_degree1",
    "rr_rank",
    "chiodo_g0_one_part_rhs",
    "chiodo_g1_summands",
    "chiodo_g1_summands_structural",
    "chiodo_g1_deg01",
    "chiodo_integral_allones",
    "chiodo_integral_single",
    "chiodo_integral_spin",
    "scale_chiodo_integral",
]


# ---------------------------------------------------------------------------
# psi-class intersection numbers


@dataclass(frozen=True)
class PsiQuery:
    g: int
    exponents: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if self.g < 0 or any(e < 0 for e in self.exponents):
            raise ValueError("genus and exponents must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def dimension(self) -> int:
        return 3 * self.g - 3 + self.n

    @property
    def stable(self) -> bool:
        return 2 * self.g - 2 + self.n > 0


def _dfact(k: int) -> int:
    """Double factorial with (-1)!! = 1."""
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


class PsiCalculator:
    """Witten-Kontsevich numbers <tau_{k_1} ... tau_{k_n}>_g.

    String and dilaton equations remove exponents 0 and 1; once every
    exponent is at least 2 the DVV (Virasoro) recursion on the largest
    exponent finishes the job. Each instance owns its memo table.
    """

    def __init__(self):
        self._memo: Dict[Tuple[int, Tuple[int, ...]], Fraction] = {}

    def __call__(self, g: int, exponents: Sequence[int]) -> Fraction:
        return self.value(g, tuple(sorted(exponents, reverse=True)))

    def value(self, g: int, ks: Tuple[int, ...]) -> Fraction:
        n = len(ks)
        if g < 0 or n == 0 or 2 * g - 2 + n <= 0:
            return Fraction(0)
        if any(k < 0 for k in ks) or sum(ks) != 3 * g - 3 + n:
            return Fraction(0)
        key = (g, ks)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        res = self._compute(g, ks)
        self._memo[key] = res
        return res

    def _compute(self, g: int, ks: Tuple[int, ...]) -> Fraction:
        n = len(ks)
        if g == 0 and n == 3:
            return Fraction(1)
        if g == 1 and n == 1:
            return Fraction(1, 24)
        if 0 in ks:
            # string equation
            rest = list(ks)
            rest.remove(0)
            total = Fraction(0)
            for i, k in enumerate(rest):
                if k:
                    lowered = rest[:i] + [k - 1] + rest[i + 1 :]
                    total += self.value(g, _key(lowered))
            return total
        if 1 in ks:
            # dilaton equation
            rest = list(ks)
            rest.remove(1)
            return (2 * g - 2 + len(rest)) * self.value(g, _key(rest))
        return self._dvv(g, ks)

    def _dvv(self, g: int, ks: Tuple[int, ...]) -> Fraction:
        k, rest = ks[0], list(ks[1:])
        total = Fraction(0)
        for i, kj in enumerate(rest):
            others = rest[:i] + rest[i + 1 :]
            c = Fraction(_dfact(2 * k + 2 * kj - 1), _dfact(2 * kj - 1))
            total += c * self.value(g, _key(others + [k + kj - 1]))
        for a in range(k - 1):
            b = k - 2 - a
            c = Fraction(_dfact(2 * a + 1) * _dfact(2 * b + 1), 2)
            total += c * self.value(g - 1, _key(rest + [a, b]))
            # split the remaining points and the genus between two sides
            m = len(rest)
            for mask in range(1 << m):
                left = [rest[i] for i in range(m) if mask >> i & 1]
                right = [rest[i] for i in range(m) if not mask >> i & 1]
                for g1 in range(g + 1):
                    lv = self.value(g1, _key(left + [a]))
                    if lv:
                        total += c * lv * self.value(g - g1, _key(right + [b]))
        return total / _dfact(2 * k + 1)


def _key(ks) -> Tuple[int, ...]:
    return tuple(sorted(ks, reverse=True))


_DEFAULT = PsiCalculator()


def psi_dvv(q: PsiQuery, calc: PsiCalculator | None = None) -> Fraction:
    """Exact psi integral via string, dilaton and DVV."""
    return (calc or _DEFAULT)(q.g, q.exponents)


def psi_genus0(exponents: Sequence[int]) -> Fraction:
    """(n-3)! / prod a_i! on the genus-0 space with n points; 0 off dimension."""
    n = len(exponents)
    if n < 3 or any(a < 0 for a in exponents) or sum(exponents) != n - 3:
        return Fraction(0)
    out = factorial(n - 3)
    for a in exponents:
        out //= factorial(a)
    return Fraction(out)


def genus1_weighted(weights: Sequence) -> Fraction:
    """Integral of 1/prod(1 - w_i psi_i) over genus-1 curves with n = len(weights) points.

    (1/24) [d^n - sum_{j=2}^{n} (j-2)! d^{n-j} e_j(w)], d = sum w.
    """
    w = [Fraction(x) for x in weights]
    n = len(w)
    if n < 1:
        raise ValueError("need at least one marked point")
    d = sum(w, Fraction(0))
    acc = d**n
    for j in range(2, n + 1):
        acc -= factorial(j - 2) * d ** (n - j) * elementary_symmetric(j, w)
    return acc / 24


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def weighted_psi(g: int, weights: Sequence, calc: PsiCalculator | None = None) -> Fraction:
    """Integral of 1/prod(1 - w_i psi_i) by expanding into psi monomials."""
    w = [Fraction(x) for x in weights]
    n = len(w)
    if 2 * g - 2 + n <= 0:
        return unstable_psi(w) if g == 0 else Fraction(0)
    calc = calc or _DEFAULT
    total = Fraction(0)
    for e in _compositions(3 * g - 3 + n, n):
        v = calc(g, e)
        if v:
            for wi, ei in zip(w, e):
                v *= wi**ei
            total += v
    return total


def unstable_psi(weights: Sequence) -> Fraction:
    """Conventional values on the genus-0 spaces with one or two points."""
    w = [Fraction(x) for x in weights]
    if len(w) == 1:
        return 1 / w[0] ** 2
    if len(w) == 2:
        return 1 / (w[0] + w[1])
    raise ValueError("unstable convention only covers one or two marked points in genus 0")


# ---------------------------------------------------------------------------
# Hodge integrals


def linear_hodge(g: int, d: int) -> Fraction:
    """Integral of Lambda(-1)/(1 - d psi_1) over genus g with one point.

    Equals (1/d^2) [t^{2g}] S(dt)^{d-1}; the genus-0 value is the unstable 1/d^2.
    """
    if g < 0 or d < 1:
        raise ValueError("need g >= 0 and d >= 1")
    if g == 0:
        return Fraction(1, d * d)
    return (s_kernel(d, 2 * g) ** (d - 1)).coeff(2 * g) / (d * d)


# ---------------------------------------------------------------------------
# Chiodo classes


@dataclass(frozen=True)
class ChiodoSpec:
    """Parameters (r, s; a_1..a_n) with residues stored in 1..r, plus a scaling x."""

    r: int
    s: int
    residues: Tuple[int, ...]
    x: Fraction = Fraction(1)

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be positive")
        if not 1 <= self.s <= self.r:
            raise ValueError("s must lie in 1..r")
        res = tuple((int(a) - 1) % self.r + 1 for a in self.residues)
        object.__setattr__(self, "residues", res)
        object.__setattr__(self, "x", Fraction(self.x))
        if self.x == 0:
            raise ValueError("scaling x must be nonzero")

    @property
    def n(self) -> int:
        return len(self.residues)

    def exists(self, g: int) -> bool:
        return (sum(self.residues) - (2 * g - 2 + self.n) * self.s) % self.r == 0

    def check(self, g: int):
        if not self.exists(g):
            raise ValueError(
                f"no r-th root: sum a_i = {sum(self.residues)} is not (2g-2+n)s = "
                f"{(2 * g - 2 + self.n) * self.s} mod {self.r}"
            )


@dataclass(frozen=True)
class Degree1ChiodoData:
    """Coefficients of kappa_1, each psi_i and each boundary divisor j_a."""

    kappa1_coeff: Fraction
    psi_coeffs: List[Fraction]
    boundary_coeffs: Dict[int, Fraction] = field(default_factory=dict)

    def scaled(self, factor) -> "Degree1ChiodoData":
        f = Fraction(factor)
        return Degree1ChiodoData(
            self.kappa1_coeff * f,
            [c * f for c in self.psi_coeffs],
            {a: c * f for a, c in self.boundary_coeffs.items()},
        )


def chiodo_ch1(params: ChiodoSpec, g: int, n: int | None = None) -> Degree1ChiodoData:
    """x * ch_1(r, s; a): B_2(s/r)/2 kappa_1 - sum B_2(a_i/r)/2 psi_i + (r/2) sum_a B_2(a/r)/2 j_a."""
    if n is not None and n != params.n:
        raise ValueError(f"params has {params.n} residues, expected {n}")
    params.check(g)
    r = params.r
    half = Fraction(1, 2)
    data = Degree1ChiodoData(
        bernoulli_poly(2, Fraction(params.s, r)) * half,
        [-bernoulli_poly(2, Fraction(a, r)) * half for a in params.residues],
        {a: Fraction(r, 2) * bernoulli_poly(2, Fraction(a, r)) * half for a in range(r)},
    )
    return data.scaled(params.x)


def chiodo_degree1(params: ChiodoSpec, g: int) -> Degree1ChiodoData:
    """Degree-1 part of Chiodo^{[x]}, which is -x ch_1."""
    return chiodo_ch1(params, g).scaled(-1)


def rr_rank(g: int, params: ChiodoSpec) -> int:
    """h^0 - h^1 of the r-th root from Riemann-Roch."""
    params.check(g)
    num = (2 * g - 2 + params.n) * params.s - sum(params.residues)
    if num % params.r:
        raise ValueError(f"non-integral rank {num}/{params.r}")
    return num // params.r - g + 1


def chiodo_g0_one_part_rhs(mu) -> Fraction:
    """(1/d) times the genus-0 integral of 1/prod(1 - mu_i psi_i).

    In genus 0 the Chiodo class is 1 (rank 0) and the pushforward contributes
    1/d. The integral is the weighted multinomial sum, evaluated here as an
    exponential-generating-function convolution over the parts.
    """
    mu = Partition(mu)
    n, d = len(mu), mu.size
    if n < 3:
        raise ValueError("need n >= 3")
    top = n - 3
    acc = [Fraction(1)] + [Fraction(0)] * top  # sum of prod mu^a / a! by total degree
    for part in mu:
        new = [Fraction(0)] * (top + 1)
        for k, c in enumerate(acc):
            if c:
                for a in range(top + 1 - k):
                    new[k + a] += c * Fraction(part**a, factorial(a))
        acc = new
    return factorial(top) * acc[top] / d


# ----- genus 1, degrees 0 and 1 -------------------------------------------------

KAPPA_PUSHFORWARD = 1  # extra power of d from pushing kappa_1 down from spin curves
PSI_PUSHFORWARD = 1
DEGREE0_PUSHFORWARD = 1


def _lemma_sum(d, n, coeff) -> Fraction:
    """sum_{j=2}^{n} (j-2)! d^{n-j} coeff(j)."""
    return sum((factorial(j - 2) * Fraction(d) ** (n - j) * coeff(j) for j in range(2, n + 1)), Fraction(0))


def chiodo_g1_summands(d: int) -> Dict[str, Fraction]:
    """The five closed-form pieces of the degree-0 and degree-1 genus-1 contribution, as displayed."""
    if d < 1:
        raise ValueError("d must be >= 1")
    D = Fraction(d)
    s0 = D**DEGREE0_PUSHFORWARD / 24 * (D**d - _lemma_sum(d, d, lambda j: comb(d, j)))

    def inner1(j):
        # binom(d+1-j, 2) vanishes exactly when d^{d-1-j} would be a negative power
        t = comb(d + 1 - j, 2) * (D ** (d - 1 - j) if comb(d + 1 - j, 2) else 0) * comb(d, j)
        return t + comb(d + 1 - j, 1) * D ** (d - j) * comb(d, j - 1)

    bracket1 = comb(d + 1, 2) * D ** (d - 1) - sum(
        (factorial(j - 2) * inner1(j) for j in range(2, d + 2)), Fraction(0)
    )
    s1 = -(D ** (1 + KAPPA_PUSHFORWARD)) / (12 * 24) * bracket1

    e = Fraction(d - 1)
    bracket2 = D**d - e**d - sum(
        (factorial(j - 2) * (D ** (d - j) * comb(d, j) - e ** (d - j) * comb(d - 1, j)) for j in range(2, d + 1)),
        Fraction(0),
    )
    s2 = D**PSI_PUSHFORWARD * (d * d - 6 * d + 6) / (12 * 24) * bracket2

    s3a = Fraction(0)
    for a in range(d - 1):
        A = Fraction(a)
        g1 = A ** (a + 1) - sum(
            (factorial(j - 2) * A ** (a + 1 - j) * comb(a, j) for j in range(2, a + 2)), Fraction(0)
        )
        s3a += (d * d - 6 * a * d + 6 * a * a) * comb(d, a) * g1 * Fraction(d - a) ** (d - a - 2)
    s3a *= -D / 24

    s3b = -sum((Fraction(d * d - 6 * a * d + 6 * a * a) for a in range(d)), Fraction(0)) * D ** (d - 1) / 24
    return {"summand0": s0, "summand1": s1, "summand2": s2, "summand3a": s3a, "summand3b": s3b}


def chiodo_g1_summands_structural(d: int, calc: PsiCalculator | None = None) -> Dict[str, Fraction]:
    """Same pieces evaluated from psi intersection numbers instead of the closed forms.

    The two-vertex graph piece here carries the genus-1 integral at its true
    normalisation, which is 1/24 of the bracket appearing in the closed form.
    """
    calc = calc or _DEFAULT
    D = Fraction(d)
    ones = [1] * d
    s0 = D * weighted_psi(1, ones, calc)
    s1 = Fraction(0)
    for e in _compositions(d - 1, d):
        s1 += calc(1, e + (2,))
    s1 *= -(D**2) / 12
    with_zero = [0] + [1] * (d - 1)
    s2 = D * (d * d - 6 * d + 6) / 12 * (weighted_psi(1, ones, calc) - weighted_psi(1, with_zero, calc))
    s3a = Fraction(0)
    for a in range(d - 1):
        g1 = weighted_psi(1, [1] * a + [0], calc)
        g0 = weighted_psi(0, [1] * (d - a) + [0], calc)
        s3a += (d * d - 6 * a * d + 6 * a * a) * comb(d, a) * g1 * g0
    s3a *= -D / 24
    g0_loop = weighted_psi(0, ones + [0, 0], calc)
    s3b = -sum((Fraction(d * d - 6 * a * d + 6 * a * a) for a in range(d)), Fraction(0)) * g0_loop / 24
    return {"summand0": s0, "summand1": s1, "summand2": s2, "summand3a": s3a, "summand3b": s3b}


def chiodo_g1_deg01(d: int) -> Fraction:
    """Sum of the displayed degree-0 and degree-1 pieces; vanishes at d = 1."""
    return sum(chiodo_g1_summands(d).values(), Fraction(0))


# ----- closed generating series --------------------------------------------------


def chiodo_integral_allones(g: int, d: int) -> Fraction:
    """Integral of eps_* Chiodo(d, d; -1, ..., -1) / prod(1 - psi_i/d) over genus g with d points.

    (1/d) [t^{2g}] S(t)^{d-1}.
    """
    if g < 0 or d < 1:
        raise ValueError("need g >= 0 and d >= 1")
    return (s_kernel(1, 2 * g) ** (d - 1)).coeff(2 * g) / d


def chiodo_integral_single(g: int, d: int) -> Fraction:
    """d times the integral of eps_* Chiodo(d, d; d)/(1 - psi_1) over genus g with one point.

    Equals (1/(2g)!) sum_{|k| <= (d-1)/2} k^{2g} / d, written through power sums of
    1..(d-1)/2 for odd d and of the odd numbers below d for even d. Each branch is
    checked against the Bernoulli closed form before returning.
    """
    if g < 1 or d < 1:
        raise ValueError("need g >= 1 and d >= 1")
    two_g = 2 * g
    if d % 2:
        N = (d - 1) // 2
        value = 2 * power_sum_range(two_g, range(1, N + 1)) / factorial(two_g)
        closed = 2 * faulhaber(two_g, N)
    else:
        N = d // 2
        value = Fraction(2) ** (1 - two_g) * power_sum_range(two_g, range(1, d, 2)) / factorial(two_g)
        closed = Fraction(2) ** (1 - two_g) * (faulhaber(two_g, 2 * N) - 2**two_g * faulhaber(two_g, N))
    if value != closed:
        raise ArithmeticError(f"power sum and Bernoulli closed form disagree at g={g}, d={d}")
    return value / d


def chiodo_integral_spin(g: int, mu, r: int) -> Fraction:
    """Integral of eps_* Chiodo^{[dr]}(dr, d; -mu) / prod(1 - mu_i psi_i) over genus g.

    d^{3g-4+n} / (r^{1-g+b} b!) times the spin coefficient extraction, b = (2g-1+n)/r.
    """
    mu = Partition(mu)
    n, d = len(mu), mu.size
    if 2 * g - 2 + n <= 0:
        raise ValueError("need 2g - 2 + n > 0")
    b = spin_b(g, n, r)
    if b is None or b < 1:
        raise ValueError(f"(2g-1+n)/r = {Fraction(2 * g - 1 + n, r)} is not a positive integer")
    A = 1 - g + b
    return Fraction(d) ** (3 * g - 4 + n) / (Fraction(r) ** A * factorial(b)) * spin_extraction(g, mu, r)


def scale_chiodo_integral(value_at_x, x_from, x_to, g: int, n: int, weights=None) -> Fraction:
    """Move F(x_from, w) to F(x_to, w * x_to / x_from) by homogeneity of degree 3g-3+n."""
    if weights is not None and len(weights) != n:
        raise ValueError("weights must have one entry per marked point")
    ratio = Fraction(x_to) / Fraction(x_from)
    return Fraction(value_at_x) * ratio ** (3 * g - 3 + n)
