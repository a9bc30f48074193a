"""Pure Python transposition walk (sparse, arbitrary-precision counts)."""
from __future__ import annotations


def evolve(tables, start_perm: int, start_part: int, steps: int):
    n_part = len(tables.parts)
    n_perm = len(tables.perms)
    perm_next = tables.perm_next
    part_next = tables.part_next
    full = tables.full_part
    T = range(len(tables.transpositions))

    def transitive_row(state):
        row = [0] * n_perm
        for key, c in state.items():
            p, q = divmod(key, n_part)
            if q == full:
                row[p] += c
        return row

    state = {start_perm * n_part + start_part: 1}
    rows = [transitive_row(state)]
    for _ in range(steps):
        nxt: dict = {}
        get = nxt.get
        for key, c in state.items():
            p, q = divmod(key, n_part)
            pn = perm_next[p]
            qn = part_next[q]
            for t in T:
                k2 = pn[t] * n_part + qn[t]
                nxt[k2] = get(k2, 0) + c
        state = nxt
        rows.append(transitive_row(state))
    return rows
