"""Integer partitions, cycle types and the symmetric functions used by the formulas."""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, List, Sequence

__all__ = [
    "Partition",
    "aut_order",
    "all_partitions",
    "class_size",
    "z_factor",
    "cycle_type",
    "elementary_symmetric",
    "power_sum",
    "parse_partition",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Any iterable of positive ints is accepted and sorted, so ``Partition((1, 2))``
    and ``Partition((2, 1))`` are the same object value.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = sorted((int(p) for p in parts), reverse=True)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return ",".join(map(str, self))


def aut_order(p: Sequence[int]) -> int:
    """|Aut(p)| = prod over distinct parts of (multiplicity)!."""
    return prod(factorial(m) for m in Counter(p).values())


def z_factor(p: Sequence[int]) -> int:
    """Centraliser order prod_k k^{m_k} m_k! of a permutation with cycle type p."""
    return prod(k**m * factorial(m) for k, m in Counter(p).items())


def class_size(p: Sequence[int]) -> int:
    """Number of permutations of S_d with cycle type p."""
    return factorial(sum(p)) // z_factor(p)


@lru_cache(maxsize=None)
def _partitions(d: int, largest: int) -> tuple:
    if d == 0:
        return ((),)
    out = []
    for first in range(min(d, largest), 0, -1):
        for rest in _partitions(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


def all_partitions(d: int) -> List[Partition]:
    """All partitions of d in reverse-lexicographic order, (d) first and (1^d) last."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return [Partition(p) for p in _partitions(d, d)]


def cycle_type(perm: Sequence[int]) -> Partition:
    """Cycle type of a permutation given in one-line notation on 0..d-1."""
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        n = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            n += 1
        lengths.append(n)
    return Partition(lengths)


def elementary_symmetric(j: int, values: Sequence) -> Fraction:
    """e_j(values); e_0 = 1 and e_j = 0 for j > len(values)."""
    if j < 0:
        raise ValueError("j must be >= 0")
    # e_k built up one variable at a time
    e = [Fraction(1)] + [Fraction(0)] * j
    for v in values:
        v = Fraction(v)
        for k in range(j, 0, -1):
            e[k] += v * e[k - 1]
    return e[j]


def power_sum(k: int, values: Sequence) -> Fraction:
    return sum((Fraction(v) ** k for v in values), Fraction(0))


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,1"`` into a partition."""
    try:
        parts = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ValueError(f"cannot parse partition {text!r}") from exc
    if not parts:
        raise ValueError("empty partition")
    return Partition(parts)
