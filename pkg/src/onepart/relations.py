"""Verification suites: exact cross-checks between independent routes.

Each suite evaluates a grid of parameter points and records both sides of an
identity as exact rationals. Points are independent, so a suite can fan out
over a process pool; results are sorted by parameters before the report is
assembled, which keeps the output identical for any worker count.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import factorial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .exact import fmt
from .hurwitz import SymmetricPoly, double_cutjoin, one_part, one_part_polynomial, spin_b, spin_one_part
from .moduli import (
    chiodo_integral_allones,
    chiodo_integral_single,
    chiodo_integral_spin,
    linear_hodge,
    scale_chiodo_integral,
)
from .oracle import BudgetExceeded, HurwitzQuery, double_hurwitz
from .partitions import Partition, all_partitions

__all__ = [
    "PointResult",
    "VerificationReport",
    "SUITES",
    "run_suite",
    "verify_thm_comparison",
    "verify_exchange",
    "verify_exchange_grid",
    "verify_appendix",
    "verify_prop_chiodo_series",
    "verify_spin",
    "load_appendix",
]

PASS, FAIL, SKIP, SMOKE = "pass", "fail", "skip", "smoke"


@dataclass
class PointResult:
    params: Dict[str, object]
    status: str
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None
    note: str = ""

    def sort_key(self):
        return tuple((k, str(v)) for k, v in sorted(self.params.items()))

    def to_dict(self) -> dict:
        out = {"params": {k: (str(v) if isinstance(v, Partition) else v) for k, v in self.params.items()}}
        out["status"] = self.status
        if self.lhs is not None:
            out["lhs"] = fmt(self.lhs)
        if self.rhs is not None:
            out["rhs"] = fmt(self.rhs)
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class VerificationReport:
    identity: str
    grid: Dict[str, object]
    points: List[PointResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(p.status != FAIL for p in self.points)

    def counts(self) -> Dict[str, int]:
        out = {PASS: 0, FAIL: 0, SKIP: 0, SMOKE: 0}
        for p in self.points:
            out[p.status] += 1
        return out

    def failures(self) -> List[PointResult]:
        return [p for p in self.points if p.status == FAIL]

    def to_dict(self, with_timing: bool = False) -> dict:
        out = {
            "identity": self.identity,
            "grid": self.grid,
            "passed": self.passed,
            "counts": self.counts(),
            "points": [p.to_dict() for p in self.points],
        }
        if with_timing:
            out["elapsed_s"] = round(self.elapsed, 6)
        return out

    def to_json(self, with_timing: bool = False) -> str:
        return json.dumps(self.to_dict(with_timing), indent=1, sort_keys=False, ensure_ascii=False)


def _compare(params, lhs, rhs, note="", smoke=False) -> PointResult:
    if lhs == rhs:
        return PointResult(params, SMOKE if smoke else PASS, lhs, rhs, note)
    return PointResult(params, FAIL, lhs, rhs, note)


def _run(identity: str, grid: dict, tasks: Sequence[tuple], fn: Callable, threads: int = 1) -> VerificationReport:
    t0 = time.perf_counter()
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(fn, tasks))
    else:
        chunks = [fn(t) for t in tasks]
    points = [p for chunk in chunks for p in chunk]
    points.sort(key=PointResult.sort_key)
    return VerificationReport(identity, grid, points, time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# Hodge side versus Chiodo side for all-ones profiles


def _comparison_point(task) -> List[PointResult]:
    g, d = task
    lhs = linear_hodge(g, d)
    chiodo = scale_chiodo_integral(chiodo_integral_allones(g, d), 1, d, g, d)
    rhs = chiodo / Fraction(d) ** (d + g - 2)
    note = "unstable continuation" if 2 * g - 2 + d <= 0 else ""
    return [_compare({"g": g, "d": d}, lhs, rhs, note)]


def verify_thm_comparison(g_max: int = 5, d_max: int = 8, threads: int = 1) -> VerificationReport:
    """linear_hodge(g, d) against d^{-(d+g-2)} times the scaled all-ones Chiodo integral."""
    if g_max < 0 or d_max < 1:
        raise ValueError("grid bounds out of range")
    tasks = [(g, d) for g in range(g_max + 1) for d in range(1, d_max + 1)]
    return _run("comparison", {"g_max": g_max, "d_max": d_max}, tasks, _comparison_point, threads)


# ---------------------------------------------------------------------------
# exchange of ramification profiles


def _orbifold(g, p, q, d, route, budget):
    """h^{q-orbifold}_{g;(p,...,p)}: profile (p^{d/p}) over infinity, (q^{d/q}) over zero."""
    mu = Partition((p,) * (d // p))
    nu = Partition((q,) * (d // q))
    if route == "oracle":
        return double_hurwitz(HurwitzQuery(g, mu, nu), budget)
    if route == "cutjoin":
        return double_cutjoin(g, mu, nu, budget)
    if route == "spin":
        # only one-part numbers have a spin series: zero profile must be (d)
        if q != d:
            return None
        return spin_one_part(g, mu, 1)
    raise ValueError(f"unknown route {route!r}")


def verify_exchange(g: int, p: int, q: int, d: int, budget: int | None = None,
                    routes=("oracle", "cutjoin")) -> VerificationReport:
    """h^{q-orb}_{g;(p..p)}/(d/p)! = h^{p-orb}_{g;(q..q)}/(d/q)! by each route, plus cross-route agreement."""
    if d % p or d % q:
        raise ValueError(f"p={p} and q={q} must divide d={d}")
    points = _exchange_points((g, p, q, d, budget, tuple(routes)))
    return VerificationReport("exchange", {"g": g, "p": p, "q": q, "d": d}, points)


def _exchange_points(task) -> List[PointResult]:
    g, p, q, d, budget, routes = task
    out = []
    values = {}
    for route in routes:
        params = {"g": g, "p": p, "q": q, "d": d, "route": route}
        try:
            left = _orbifold(g, p, q, d, route, budget)
            right = _orbifold(g, q, p, d, route, budget)
        except BudgetExceeded as exc:
            out.append(PointResult(params, SKIP, note=f"budget: {exc}"))
            continue
        if route == "spin":
            # the spin series replaces whichever side is one-part; the other side stays on cut-and-join
            if left is None and right is None:
                continue
            try:
                left = left if left is not None else _orbifold(g, p, q, d, "cutjoin", budget)
                right = right if right is not None else _orbifold(g, q, p, d, "cutjoin", budget)
            except BudgetExceeded as exc:
                out.append(PointResult(params, SKIP, note=f"budget: {exc}"))
                continue
        lhs = left / factorial(d // p)
        rhs = right / factorial(d // q)
        values[route] = (lhs, rhs)
        out.append(_compare(params, lhs, rhs))
    if len(values) > 1:
        names = sorted(values)
        first = values[names[0]]
        for other in names[1:]:
            params = {"g": g, "p": p, "q": q, "d": d, "route": f"{names[0]}={other}"}
            out.append(_compare(params, first[0], values[other][0], "left side across routes"))
    return out


def verify_exchange_grid(g_max: int = 2, d_max: int = 5, budget: int | None = None, threads: int = 1,
                         routes=("oracle", "cutjoin")) -> VerificationReport:
    tasks = []
    for g in range(g_max + 1):
        for d in range(1, d_max + 1):
            divs = [x for x in range(1, d + 1) if d % x == 0]
            for p in divs:
                for q in divs:
                    if p < q:
                        tasks.append((g, p, q, d, budget, tuple(routes)))
    return _run("exchange", {"g_max": g_max, "d_max": d_max, "routes": list(routes)}, tasks,
                _exchange_points, threads)


# ---------------------------------------------------------------------------
# published polynomial table


@lru_cache(maxsize=None)
def load_appendix() -> Dict[int, Tuple[int, Tuple[Tuple[Tuple[int, ...], int], ...]]]:
    """genus -> (denominator, ((exponents, integer coefficient), ...)) as printed."""
    text = resources.files("onepart").joinpath("data/reference_polynomials.json").read_text()
    data = json.loads(text)
    out = {}
    for entry in data["polynomials"]:
        terms = tuple((tuple(t["exponents"]), int(t["coefficient"])) for t in entry["terms"])
        out[int(entry["genus"])] = (int(entry["denominator"]), terms)
    return out


def appendix_poly(g: int, n: int) -> SymmetricPoly:
    denom, terms = load_appendix()[g]
    return SymmetricPoly({e: Fraction(c, denom) for e, c in terms}, n)


def _appendix_point(task) -> List[PointResult]:
    g, n = task
    computed = one_part_polynomial(g, n)
    printed = appendix_poly(g, n)
    params = {"g": g, "n": n}
    if computed.terms == printed.terms:
        return [PointResult(params, PASS, note=printed.render())]
    missing = {k: v for k, v in computed.terms.items() if k not in printed.terms}
    wrong = {k for k, v in printed.terms.items() if computed.terms.get(k) != v}
    if wrong:
        note = "printed coefficients differ at " + ", ".join(str(list(k)) for k in sorted(wrong))
    else:
        note = "printed coefficients all agree; missing terms: " + SymmetricPoly(missing, n).render()
    return [PointResult(params, FAIL, note=note)]


def verify_appendix(g_max: int = 5, n_max: int = 5, threads: int = 1) -> VerificationReport:
    """one_part_polynomial(g, n) against the transcribed table, as exact structures."""
    if not 0 <= g_max <= 5:
        raise ValueError("the table covers genus 0..5")
    tasks = [(g, n) for g in range(g_max + 1) for n in range(1, n_max + 1)]
    return _run("appendix", {"g_max": g_max, "n_max": n_max}, tasks, _appendix_point, threads)


# ---------------------------------------------------------------------------
# Chiodo generating series


def _chiodo_point(task) -> List[PointResult]:
    g, d = task
    out = []
    # (a) all-ones profile
    if 2 * g - 2 + d > 0:
        lhs = one_part(g, (1,) * d)
        rhs = Fraction(d) ** (2 - g) * scale_chiodo_integral(chiodo_integral_allones(g, d), 1, d, g, d)
        out.append(_compare({"g": g, "d": d, "case": "a"}, lhs, rhs))
    # (b) single part; the single-part integral needs g >= 1
    if g >= 1:
        lhs = one_part(g, (d,))
        unscaled = chiodo_integral_single(g, d) / d
        rhs = Fraction(d) ** (2 - g) * scale_chiodo_integral(unscaled, 1, d, g, 1)
        out.append(_compare({"g": g, "d": d, "case": "b"}, lhs, rhs, "odd" if d % 2 else "even"))
    return out


def verify_prop_chiodo_series(g_max: int = 4, d_max: int = 8, threads: int = 1) -> VerificationReport:
    tasks = [(g, d) for g in range(g_max + 1) for d in range(1, d_max + 1)]
    return _run("chiodo", {"g_max": g_max, "d_max": d_max}, tasks, _chiodo_point, threads)


# ---------------------------------------------------------------------------
# spin


def _spin_point(task) -> List[PointResult]:
    g, mu, r = task
    n, d = len(mu), mu.size
    params = {"g": g, "mu": mu, "r": r}
    out = []
    if r == 1:
        out.append(_compare({**params, "check": "r=1 reduction"}, spin_one_part(g, mu, 1), one_part(g, mu)))
    b = spin_b(g, n, r)
    if 2 * g - 2 + n <= 0:
        out.append(PointResult({**params, "check": "prefactor"}, SKIP, note="unstable"))
        return out
    if b is None or b < 1:
        out.append(PointResult({**params, "check": "prefactor"}, SKIP, note="(2g-1+n)/r not a positive integer"))
        return out
    D = 3 * g - 3 + n
    integral = chiodo_integral_spin(g, mu, r)
    rhs = Fraction(r) ** (2 * g - 2 + n) * Fraction(d * r) ** (b - D) * integral
    # both sides come from the same series; this is bookkeeping of the prefactors only
    out.append(_compare({**params, "check": "prefactor"}, spin_one_part(g, mu, r), rhs,
                        "same series on both sides", smoke=True))
    return out


def verify_spin(g_max: int = 2, d_max: int = 4, r_max: int = 3, threads: int = 1,
                budget: int | None = None) -> VerificationReport:
    tasks = [(g, mu, r) for g in range(g_max + 1) for d in range(1, d_max + 1)
             for mu in all_partitions(d) for r in range(1, r_max + 1)]
    report = _run("spin", {"g_max": g_max, "d_max": d_max, "r_max": r_max}, tasks, _spin_point, threads)
    # exchange rerun with the r = 1 spin series on the one-part side
    ex = verify_exchange_grid(g_max, d_max, budget, threads, routes=("spin",))
    for p in ex.points:
        p.params = {"exchange": True, **p.params}
    report.points.extend(ex.points)
    report.points.sort(key=PointResult.sort_key)
    report.elapsed += ex.elapsed
    return report


SUITES = {
    "comparison": verify_thm_comparison,
    "exchange": verify_exchange_grid,
    "appendix": verify_appendix,
    "chiodo": verify_prop_chiodo_series,
    "spin": verify_spin,
}


def run_suite(name: str, g_max: int | None = None, d_max: int | None = None, threads: int = 1,
              budget: int | None = None) -> VerificationReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    kwargs = {"threads": threads}
    if g_max is not None:
        kwargs["g_max"] = g_max
    if d_max is not None:
        kwargs["n_max" if name == "appendix" else "d_max"] = d_max
    if budget is not None and name in ("exchange", "spin"):
        kwargs["budget"] = budget
    return SUITES[name](**kwargs)
