"""Brute-force ground truth for Hurwitz numbers.

Counts tuples (sigma_0, tau_1, ..., tau_m, sigma_inf) in S_d with
sigma_inf * tau_m ... tau_1 * sigma_0 = id, sigma_0 of cycle type nu,
sigma_inf of cycle type mu, every tau a transposition, and the generated
group transitive. The count is conjugation invariant, so sigma_0 is fixed to
one representative of its class and the result is multiplied by the class
size. Tuples are enumerated as walks over (product, orbit partition) states
with counts merged per state, which keeps the enumeration exact while
avoiding the C(d,2)^m blow-up of a plain depth-first search.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from ._kernel import evolve, walk_tables
from .partitions import Partition, aut_order, class_size, cycle_type

__all__ = [
    "BudgetExceeded",
    "HurwitzQuery",
    "DEFAULT_BUDGET",
    "default_budget",
    "walk_cost",
    "raw_count",
    "double_hurwitz",
    "one_part_oracle",
    "orbifold_oracle",
]

DEFAULT_BUDGET = 10**9


class BudgetExceeded(RuntimeError):
    """The requested enumeration is larger than the configured budget."""


def default_budget() -> int:
    env = os.environ.get("HURWITZ_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class HurwitzQuery:
    g: int
    mu: Partition
    nu: Partition

    def __post_init__(self):
        object.__setattr__(self, "mu", Partition(self.mu))
        object.__setattr__(self, "nu", Partition(self.nu))
        if self.g < 0:
            raise ValueError("genus must be >= 0")
        if self.mu.size != self.nu.size:
            raise ValueError(f"|mu| = {self.mu.size} differs from |nu| = {self.nu.size}")
        if self.mu.size < 1:
            raise ValueError("profiles must be nonempty")

    @property
    def d(self) -> int:
        return self.mu.size

    @property
    def m(self) -> int:
        """Number of simple branch points from Riemann-Hurwitz."""
        return 2 * self.g - 2 + len(self.mu) + len(self.nu)


def _bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def walk_cost(d: int, m: int) -> int:
    """Upper bound on state updates performed by the walk for (d, m)."""
    return factorial(d) * _bell(d) * comb(d, 2) * max(m, 1)


def _canonical_rep(nu: Partition):
    perm = []
    start = 0
    for length in nu:
        cyc = list(range(start, start + length))
        perm.extend(cyc[1:] + cyc[:1])
        start += length
    return tuple(perm)


@lru_cache(maxsize=256)
def _walk_rows(nu: Partition, steps: int, backend: str | None = None):
    tables = walk_tables(nu.size)
    rep = _canonical_rep(nu)
    rows = evolve(tables, tables.perm_index[rep], tables.orbit_partition(rep), steps, backend)
    types = [cycle_type(p) for p in tables.perms]
    by_type = []
    for row in rows:
        acc: dict = {}
        for p, c in enumerate(row):
            if c:
                acc[types[p]] = acc.get(types[p], 0) + c
        by_type.append(acc)
    return by_type


def raw_count(q: HurwitzQuery, budget: int | None = None, backend: str | None = None) -> int:
    """Number of transitive factorisation tuples for ``q``."""
    m = q.m
    if m < 0:
        return 0
    # parity: each transposition flips the sign
    if (m + q.d - len(q.mu) + q.d - len(q.nu)) % 2:
        return 0
    budget = default_budget() if budget is None else budget
    cost = walk_cost(q.d, m)
    if cost > budget:
        raise BudgetExceeded(
            f"oracle walk for g={q.g}, mu={tuple(q.mu)}, nu={tuple(q.nu)} needs ~{cost} updates "
            f"(budget {budget})"
        )
    rows = _walk_rows(q.nu, m, backend)
    return class_size(q.nu) * rows[m].get(q.mu, 0)


def double_hurwitz(q: HurwitzQuery, budget: int | None = None, backend: str | None = None) -> Fraction:
    """|Aut(mu)| * raw / (d! m!), with mu the profile over infinity."""
    if q.m < 0:
        return Fraction(0)
    return Fraction(aut_order(q.mu) * raw_count(q, budget, backend), factorial(q.d) * factorial(q.m))


def one_part_oracle(g: int, mu, budget: int | None = None) -> Fraction:
    mu = Partition(mu)
    return double_hurwitz(HurwitzQuery(g, mu, Partition((mu.size,))), budget)


def orbifold_oracle(g: int, mu, q_ord: int, budget: int | None = None) -> Fraction:
    mu = Partition(mu)
    if q_ord < 1 or mu.size % q_ord:
        raise ValueError(f"orbifold order {q_ord} does not divide d = {mu.size}")
    return double_hurwitz(HurwitzQuery(g, mu, Partition((q_ord,) * (mu.size // q_ord))), budget)
