from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, List, Tuple

# dense (perm x partition) arrays above this many cells are not allocated
DENSE_CELL_LIMIT = 6_000_000


def _set_partitions(d: int) -> List[Tuple[int, ...]]:
    """All set partitions of range(d) as restricted growth strings."""
    out: List[Tuple[int, ...]] = []

    def rec(prefix: List[int], top: int):
        if len(prefix) == d:
            out.append(tuple(prefix))
            return
        for b in range(top + 2):
            prefix.append(b)
            rec(prefix, max(top, b))
            prefix.pop()

    if d == 0:
        return [()]
    rec([0], 0)
    return out


def _canonical(labels) -> Tuple[int, ...]:
    relabel: Dict[int, int] = {}
    return tuple(relabel.setdefault(x, len(relabel)) for x in labels)


@dataclass
class WalkTables:
    d: int
    perms: List[Tuple[int, ...]]
    perm_index: Dict[Tuple[int, ...], int]
    transpositions: List[Tuple[int, int]]
    perm_next: List[List[int]]
    parts: List[Tuple[int, ...]]
    part_index: Dict[Tuple[int, ...], int]
    part_next: List[List[int]]
    full_part: int
    _arrays: dict = field(default_factory=dict, repr=False)

    @property
    def dense_ok(self) -> bool:
        return len(self.perms) * len(self.parts) <= DENSE_CELL_LIMIT

    def perm_next_array(self):
        import numpy as np

        if "perm" not in self._arrays:
            self._arrays["perm"] = np.ascontiguousarray(self.perm_next, dtype=np.int32)
        return self._arrays["perm"]

    def part_next_array(self):
        import numpy as np

        if "part" not in self._arrays:
            self._arrays["part"] = np.ascontiguousarray(self.part_next, dtype=np.int32)
        return self._arrays["part"]

    def orbit_partition(self, perm: Tuple[int, ...]) -> int:
        """Index of the set partition given by the cycles of ``perm``."""
        labels = [-1] * self.d
        for start in range(self.d):
            if labels[start] >= 0:
                continue
            x = start
            while labels[x] < 0:
                labels[x] = start
                x = perm[x]
        return self.part_index[_canonical(labels)]


@lru_cache(maxsize=None)
def walk_tables(d: int) -> WalkTables:
    perms = list(permutations(range(d)))
    perm_index = {p: i for i, p in enumerate(perms)}
    trans = list(combinations(range(d), 2))

    perm_next = []
    for p in perms:
        row = []
        for i, j in trans:
            # (i j) applied after p
            q = tuple(j if x == i else i if x == j else x for x in p)
            row.append(perm_index[q])
        perm_next.append(row)

    parts = _set_partitions(d)
    part_index = {p: i for i, p in enumerate(parts)}
    part_next = []
    for labels in parts:
        row = []
        for i, j in trans:
            a, b = labels[i], labels[j]
            merged = _canonical(a if x == b else x for x in labels)
            row.append(part_index[merged])
        part_next.append(row)

    return WalkTables(
        d=d,
        perms=perms,
        perm_index=perm_index,
        transpositions=trans,
        perm_next=perm_next,
        parts=parts,
        part_index=part_index,
        part_next=part_next,
        full_part=part_index[(0,) * d],
    )
