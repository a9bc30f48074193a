"""One-part double, orbifold and spin one-part Hurwitz numbers.

Three independent routes are provided:

* the hyperbolic generating series,
  h_{g;mu} = d^{2g-2+n} [t^{2g}] prod_i S(t mu_i) / S(t),
  both numerically (:func:`one_part`) and as a symmetric polynomial in the
  squared parts (:func:`one_part_polynomial`);
* cut-and-join in the class algebra of S_d followed by a formal logarithm to
  isolate connected covers (:func:`double_cutjoin`), which handles arbitrary
  pairs of profiles;
* the multivariate series for spin one-part numbers (:func:`spin_one_part`).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, lcm
from typing import Dict, Iterator, Tuple

from .oracle import BudgetExceeded, HurwitzQuery, default_budget
from .partitions import Partition, aut_order, class_size
from .series import Series1, SeriesN, invert, s_kernel

__all__ = [
    "one_part",
    "orbifold_series_available",
    "SymmetricPoly",
    "one_part_polynomial",
    "double_cutjoin",
    "transposition_step",
    "spin_one_part",
    "spin_b",
    "spin_extraction",
    "spin_one_part_result",
]


def one_part(g: int, mu) -> Fraction:
    """h^{one-part}_{g;mu} from the hyperbolic series."""
    mu = Partition(mu)
    if g < 0:
        raise ValueError("genus must be >= 0")
    if not mu:
        raise ValueError("mu must be nonempty")
    d, n = mu.size, len(mu)
    cap = 2 * g
    f = invert(s_kernel(1, cap))
    for part in mu:
        f = f * s_kernel(part, cap)
    return Fraction(d) ** (2 * g - 2 + n) * f.coeff(cap)


def orbifold_series_available(mu, nu) -> bool:
    """The series route only covers nu = (d)."""
    return len(nu) == 1


# ---------------------------------------------------------------------------
# symbolic polynomial


@dataclass(frozen=True)
class SymmetricPoly:
    """Symmetric polynomial in n variables in the monomial symmetric basis.

    ``terms`` maps a weakly decreasing exponent tuple lam to the coefficient of
    m_lam = sum over distinct rearrangements of prod x_i^{lam_i}. Exponents
    are in the parts mu_i themselves, so they are all even here.
    """

    terms: Dict[Tuple[int, ...], Fraction]
    n: int

    def __post_init__(self):
        clean = {}
        for lam, c in self.terms.items():
            lam = tuple(sorted((e for e in lam if e), reverse=True))
            if len(lam) > self.n or not c:
                continue
            clean[lam] = clean.get(lam, Fraction(0)) + Fraction(c)
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})

    def restrict(self, n: int) -> "SymmetricPoly":
        """Set variables n+1, ... to zero."""
        return SymmetricPoly(self.terms, n)

    def evaluate(self, values) -> Fraction:
        values = [Fraction(v) for v in values]
        if len(values) != self.n:
            raise ValueError(f"expected {self.n} values")
        return sum((c * _monomial_symmetric(lam, values) for lam, c in self.terms.items()), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(lam) for lam in self.terms), default=0)

    def exponents(self):
        return {e for lam in self.terms for e in lam}

    def denominator(self) -> int:
        return lcm(*(c.denominator for c in self.terms.values())) if self.terms else 1

    def sorted_terms(self):
        """Terms ordered by total degree, then reverse lexicographically."""
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])))

    def to_json(self) -> dict:
        from .exact import fmt

        return {
            "n": self.n,
            "terms": [{"exponents": list(lam), "coefficient": fmt(c)} for lam, c in self.sorted_terms()],
        }

    def render(self) -> str:
        """Sigma-notation with a common denominator, e.g. ``1/24 (Σ μ_i^2 - 1)``."""
        if not self.terms:
            return "0"
        D = self.denominator()
        pieces = []
        for lam, c in self.sorted_terms():
            k = c * D
            assert k.denominator == 1
            k = k.numerator
            mono = _render_monomial(lam)
            if mono:
                body = mono if abs(k) == 1 else f"{abs(k)} {mono}"
            else:
                body = str(abs(k))
            sign = "-" if k < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        if D == 1:
            return text if len(pieces) == 1 else f"({text})"
        return f"1/{D} ({text})"


_INDEX = "ijklpqrs"


def _render_monomial(lam) -> str:
    if not lam:
        return ""
    return "Σ " + " ".join(f"μ_{_INDEX[i]}^{e}" for i, e in enumerate(lam))


def _distinct_rearrangements(lam, n) -> Iterator[Tuple[int, ...]]:
    padded = tuple(lam) + (0,) * (n - len(lam))
    seen = set()
    from itertools import permutations

    for p in permutations(padded):
        if p not in seen:
            seen.add(p)
            yield p


def _monomial_symmetric(lam, values) -> Fraction:
    n = len(values)
    if len(lam) > n:
        return Fraction(0)
    total = Fraction(0)
    for e in _distinct_rearrangements(lam, n):
        term = Fraction(1)
        for v, k in zip(values, e):
            if k:
                term *= v**k
        total += term
    return total


def _partitions_into(k: int, max_len: int, largest: int | None = None):
    if largest is None:
        largest = k
    if k == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions_into(k - first, max_len - 1, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def one_part_polynomial(g: int, n: int) -> SymmetricPoly:
    """P_{g,n} with h^{one-part}_{g;mu} = d^{2g-2+n} P_{g,n}(mu_1^2, ..., mu_n^2).

    Built from the coefficient of t^{2g} in prod_i S(t mu_i) / S(t): the
    numerator contributes prod_j c_{k_j} m_{2k}(mu) for each partition k of the
    mu-degree, with c_k = [x^{2k}] S(x).
    """
    if g < 0 or n < 1:
        raise ValueError("need g >= 0 and n >= 1")
    cap = 2 * g
    s = s_kernel(1, cap)
    inv = invert(s)
    terms: Dict[Tuple[int, ...], Fraction] = {}
    for k in range(g + 1):
        rest = inv.coeff(2 * (g - k))
        if not rest:
            continue
        for lam in _partitions_into(k, n):
            c = rest
            for part in lam:
                c *= s.coeff(2 * part)
            key = tuple(2 * part for part in lam)
            terms[key] = terms.get(key, Fraction(0)) + c
    return SymmetricPoly(terms, n)


# ---------------------------------------------------------------------------
# cut-and-join


def transposition_step(lam: Partition) -> Dict[Partition, int]:
    """Cycle types of tau*pi for a fixed pi of type lam, over all transpositions tau."""
    out: Counter = Counter()
    mult = Counter(lam)
    parts = list(lam)
    # cut: both points in one L-cycle
    for L, c in mult.items():
        for k in range(1, L // 2 + 1):
            ways = L if 2 * k != L else L // 2
            new = list(parts)
            new.remove(L)
            new += [k, L - k]
            out[Partition(new)] += c * ways
    # join: points in two different cycles
    distinct = sorted(mult)
    for ai, a in enumerate(distinct):
        for b in distinct[ai:]:
            pairs = mult[a] * (mult[a] - 1) // 2 if a == b else mult[a] * mult[b]
            if not pairs:
                continue
            new = list(parts)
            new.remove(a)
            new.remove(b)
            new.append(a + b)
            out[Partition(new)] += pairs * a * b
    return dict(out)


@lru_cache(maxsize=None)
def _step_table(d: int) -> Dict[Partition, Dict[Partition, int]]:
    from .partitions import all_partitions

    return {lam: transposition_step(lam) for lam in all_partitions(d)}


@lru_cache(maxsize=None)
def _disconnected_layers(nu: Partition, steps: int) -> Tuple[Dict[Partition, int], ...]:
    """Possibly disconnected tuple counts after k transpositions, k = 0..steps.

    Entry [k][lam] counts (sigma_0 of type nu, tau_1..tau_k) whose product
    has type lam, summed over the whole class of nu.
    """
    table = _step_table(nu.size)
    layer = {nu: class_size(nu)}
    layers = [layer]
    for _ in range(steps):
        nxt: Dict[Partition, int] = {}
        for lam, c in layer.items():
            for lam2, w in table[lam].items():
                nxt[lam2] = nxt.get(lam2, 0) + c * w
        layer = nxt
        layers.append(layer)
    return tuple(layers)


def _sub_multisets(p: Partition):
    mult = Counter(p)
    keys = sorted(mult)
    for counts in product(*(range(mult[k] + 1) for k in keys)):
        parts = []
        for k, c in zip(keys, counts):
            parts += [k] * c
        if parts:
            yield Partition(parts)


def _merge(a: Partition, b: Partition) -> Partition:
    return Partition(tuple(a) + tuple(b))


def _within(sub: Partition, whole: Counter) -> bool:
    return not (Counter(sub) - whole)


def double_cutjoin(g: int, mu, nu, budget: int | None = None) -> Fraction:
    """Connected double Hurwitz number through cut-and-join.

    The disconnected exponential generating function
    F = sum N(alpha, beta, k) p_alpha q_beta u^k / (|alpha|! k!)
    is the exponential of its connected part, so the connected coefficient is
    read off log F restricted to sub-profiles of (mu, nu).
    """
    q = HurwitzQuery(g, Partition(mu), Partition(nu))
    mu, nu, m = q.mu, q.nu, q.m
    if m < 0:
        return Fraction(0)
    budget = default_budget() if budget is None else budget
    # each layer is at most p(d)^2 products; bound by a coarse count of sub-profile pairs
    cost = (m + 1) * sum(1 for _ in _sub_multisets(mu)) * sum(1 for _ in _sub_multisets(nu)) * (m + 1)
    if cost > budget:
        raise BudgetExceeded(f"cut-and-join for g={g}, mu={tuple(mu)}, nu={tuple(nu)} exceeds budget {budget}")

    if len(mu) == 1 or len(nu) == 1:
        # a full cycle on one side forces transitivity
        raw = _disconnected_layers(nu, m)[m].get(mu, 0)
        return Fraction(aut_order(mu) * raw, factorial(q.d) * factorial(m))

    mu_c, nu_c = Counter(mu), Counter(nu)
    # G = F - 1 on the relevant monomials: key (alpha, beta, k)
    G: Dict[tuple, Fraction] = {}
    for beta in _sub_multisets(nu):
        layers = _disconnected_layers(beta, m)
        for k in range(m + 1):
            for alpha, count in layers[k].items():
                if count and _within(alpha, mu_c):
                    G[(alpha, beta, k)] = Fraction(count, factorial(beta.size) * factorial(k))

    target = (mu, nu, m)
    # log(1 + G) = sum_j (-1)^{j+1} G^j / j, truncated to sub-monomials of the target
    result = G.get(target, Fraction(0))
    power = dict(G)
    for j in range(2, min(len(mu), len(nu)) + 1):
        nxt: Dict[tuple, Fraction] = {}
        for (a1, b1, k1), c1 in power.items():
            for (a2, b2, k2), c2 in G.items():
                k = k1 + k2
                if k > m:
                    continue
                a = _merge(a1, a2)
                if not _within(a, mu_c):
                    continue
                b = _merge(b1, b2)
                if not _within(b, nu_c):
                    continue
                key = (a, b, k)
                nxt[key] = nxt.get(key, Fraction(0)) + c1 * c2
        power = nxt
        result += Fraction((-1) ** (j + 1), j) * power.get(target, Fraction(0))
    return aut_order(mu) * result


# ---------------------------------------------------------------------------
# spin


def spin_b(g: int, n: int, r: int):
    """(2g - 1 + n) / r as an int, or None when it is not a nonnegative integer."""
    num = 2 * g - 1 + n
    if r < 1:
        raise ValueError("r must be >= 1")
    if num < 0 or num % r:
        return None
    return num // r


@dataclass(frozen=True)
class SpinResult:
    value: Fraction
    divisible: bool
    b: int | None = field(default=None)


def spin_one_part_result(g: int, mu, r: int) -> SpinResult:
    mu = Partition(mu)
    d, n = mu.size, len(mu)
    b = spin_b(g, n, r)
    if b is None:
        return SpinResult(Fraction(0), False, None)
    if b == 0:
        # empty extraction: the constant term of z^{n-1}(...) at z = 0
        return SpinResult(Fraction(1, d) if n == 1 else Fraction(0), True, 0)
    caps = (r,) * b
    top = b * r
    # univariate factor in w = z_1 + ... + z_b
    inner = invert(s_kernel(1, top))
    for part in mu:
        inner = inner * s_kernel(part, top)
    inner = inner.shift(n - 1)
    total = SeriesN.compose_sum(inner, caps)
    sd = s_kernel(d, r)
    for j in range(b):
        total = total * SeriesN.from_univariate(sd, j, caps)
    # 1/b! for the b unordered branch points; fixed by the r = 1 reduction
    value = Fraction(d) ** (b - 1) * total.multi_extract(caps) / factorial(b)
    return SpinResult(value, True, b)


def spin_extraction(g: int, mu, r: int) -> Fraction:
    """[z_1^r ... z_b^r] prod_j S(d z_j) prod_i S(mu_i z) z^{n-1} / S(z), z = z_1 + ... + z_b."""
    res = spin_one_part_result(g, mu, r)
    if not res.divisible:
        raise ValueError(f"(2g-1+n)/r is not a nonnegative integer for g={g}, n={len(mu)}, r={r}")
    mu = Partition(mu)
    if res.b == 0:
        return res.value * mu.size
    return res.value * factorial(res.b) / Fraction(mu.size) ** (res.b - 1)


def spin_one_part(g: int, mu, r: int) -> Fraction:
    """Spin one-part number h^{(r)}_{g;mu}; 0 when (2g-1+n)/r is not an integer.

    Equal to d^{b-1}/b! times :func:`spin_extraction`, b = (2g-1+n)/r.
    """
    return spin_one_part_result(g, mu, r).value
