"""Transposition-walk kernel behind the brute-force oracle.

The walk state is (current product permutation, set partition of the points
into orbits of the group generated so far). Both coordinates are indexed and
their transitions under each transposition are tabulated, so one step is pure
integer table lookups. ``evolve`` comes from the compiled ``_walk`` extension
when it is importable and from :mod:`._walk_py` otherwise; set
``ONEPART_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from ._tables import WalkTables, walk_tables
from ._walk_py import evolve as evolve_py

try:
    if os.environ.get("ONEPART_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from ._walk import evolve as _evolve_c
except ImportError:
    _evolve_c = None

BACKEND = "cython" if _evolve_c is not None else "python"

# largest total walk count the uint64 kernel may accumulate
_UINT64_LIMIT = 2**64 - 1


def evolve_c(tables: WalkTables, start_perm: int, start_part: int, steps: int):
    """Compiled walk; returns per-step rows as lists of Python ints."""
    if _evolve_c is None:
        raise RuntimeError("compiled kernel is not available")
    import numpy as np

    out = _evolve_c(
        tables.perm_next_array(),
        tables.part_next_array(),
        start_perm,
        start_part,
        tables.full_part,
        steps,
    )
    return [[int(x) for x in row] for row in np.asarray(out)]


def evolve(tables: WalkTables, start_perm: int, start_part: int, steps: int, backend: str | None = None):
    """Count transposition walks ending in a transitive state.

    Returns ``rows`` with ``rows[k][p]`` the number of length-k walks from
    the start state that reach permutation index ``p`` with all points in a
    single orbit.
    """
    backend = backend or BACKEND
    n_trans = len(tables.transpositions)
    if backend == "cython" and n_trans**steps <= _UINT64_LIMIT and tables.dense_ok:
        return evolve_c(tables, start_perm, start_part, steps)
    return evolve_py(tables, start_perm, start_part, steps)


__all__ = ["BACKEND", "WalkTables", "walk_tables", "evolve", "evolve_c", "evolve_py"]
