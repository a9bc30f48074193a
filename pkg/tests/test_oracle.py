import os
import subprocess
import sys
from fractions import Fraction

import pytest

from onepart import _kernel
from onepart.oracle import (
    _canonical_rep,
    BudgetExceeded,
    HurwitzQuery,
    double_hurwitz,
    one_part_oracle,
    orbifold_oracle,
    raw_count,
)
from onepart.partitions import all_partitions

# Brute-force counts frozen from the walk enumeration.
FROZEN = [
    ((0, (2, 1), (2, 1)), 24, Fraction(2)),
    ((0, (1, 1, 1), (2, 1)), 24, Fraction(4)),
    ((1, (2, 1), (2, 1)), 240, Fraction(5, 3)),
    ((1, (3, 1), (2, 2)), 2592, Fraction(9, 2)),
    ((0, (2, 2), (3, 1)), 72, Fraction(3)),
    ((2, (3, 2), (4, 1)), 9999360, Fraction(1736, 15)),
    ((1, (2, 2, 1), (3, 2)), 489600, Fraction(68)),
    ((2, (1, 1, 1, 1), (2, 2)), 419328, Fraction(52, 5)),
]


@pytest.mark.parametrize("args,raw,value", FROZEN)
def test_frozen_counts(args, raw, value):
    q = HurwitzQuery(*args)
    assert raw_count(q) == raw
    assert double_hurwitz(q) == value


def test_small_raw_counts():
    assert raw_count(HurwitzQuery(0, (2,), (1, 1))) == 1
    assert raw_count(HurwitzQuery(0, (2,), (2,))) == 1
    assert raw_count(HurwitzQuery(1, (1,), (1,))) == 0


def test_weighted_values():
    assert double_hurwitz(HurwitzQuery(0, (1, 1), (2,))) == 1
    assert double_hurwitz(HurwitzQuery(0, (2,), (2,))) == Fraction(1, 2)
    assert double_hurwitz(HurwitzQuery(1, (1, 1), (2,))) == Fraction(1, 6)
    assert one_part_oracle(1, (1,)) == 0
    assert one_part_oracle(0, (1, 1, 1)) == 3
    assert one_part_oracle(2, (1,) * 5) == Fraction(15625, 16)
    assert orbifold_oracle(0, (2,), 1) == Fraction(1, 2)


def test_query_validation():
    with pytest.raises(ValueError):
        HurwitzQuery(0, (2, 1), (2,))
    with pytest.raises(ValueError):
        HurwitzQuery(-1, (1,), (1,))
    with pytest.raises(ValueError):
        orbifold_oracle(0, (2, 1), 2)


def test_budget_guard(monkeypatch):
    q = HurwitzQuery(1, (1,) * 5, (5,))
    with pytest.raises(BudgetExceeded):
        raw_count(q, budget=100)
    monkeypatch.setenv("HURWITZ_BUDGET", "100")
    with pytest.raises(BudgetExceeded):
        raw_count(q)


def _pairs(d_max=5):
    for d in range(1, d_max + 1):
        for mu in all_partitions(d):
            for nu in all_partitions(d):
                yield mu, nu


@pytest.mark.parametrize("g", [0, 1, 2])
def test_exchange_symmetry_of_raw_counts(g):
    for mu, nu in _pairs():
        assert raw_count(HurwitzQuery(g, mu, nu)) == raw_count(HurwitzQuery(g, nu, mu))


@pytest.mark.skipif(_kernel.BACKEND != "cython", reason="compiled kernel not built")
@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_backends_agree(d):
    tables = _kernel.walk_tables(d)
    for nu in all_partitions(d):
        rep = _canonical_rep(nu)
        start = (tables.perm_index[rep], tables.orbit_partition(rep))
        steps = d + len(nu) + 2
        assert _kernel.evolve_c(tables, *start, steps) == _kernel.evolve_py(tables, *start, steps)


def test_pure_python_backend_used_when_forced():
    out = subprocess.run(
        [sys.executable, "-c", "from onepart import _kernel; print(_kernel.BACKEND)"],
        env={**os.environ, "ONEPART_PURE_PYTHON": "1"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"
