from collections import Counter
from fractions import Fraction
from itertools import permutations
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from onepart.partitions import (
    Partition,
    all_partitions,
    aut_order,
    class_size,
    cycle_type,
    elementary_symmetric,
    parse_partition,
    power_sum,
)


def test_partition_is_canonical():
    assert Partition((1, 3, 2)) == Partition((3, 2, 1))
    assert str(Partition((1, 3, 2))) == "3,2,1"
    assert Partition((2, 2, 1)).size == 5
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_aut_order():
    assert aut_order((1, 1, 1)) == 6
    assert aut_order((3, 2, 1)) == 1
    assert aut_order((2, 2, 1, 1, 1)) == 12


def test_all_partitions_counts():
    assert all_partitions(1) == [Partition((1,))]
    assert len(all_partitions(4)) == 5
    assert len(all_partitions(8)) == 22
    ps = all_partitions(6)
    assert ps[0] == Partition((6,)) and ps[-1] == Partition((1,) * 6)


@pytest.mark.parametrize("d", range(1, 8))
def test_class_sizes_against_enumeration(d):
    counts = Counter(cycle_type(p) for p in permutations(range(d)))
    assert sum(class_size(p) for p in all_partitions(d)) == factorial(d)
    for p in all_partitions(d):
        assert counts[p] == class_size(p)


def test_symmetric_functions():
    assert elementary_symmetric(2, [1, 1, 1]) == 3
    assert all(elementary_symmetric(j, [1] * 6) == comb(6, j) for j in range(8))
    assert power_sum(2, [1, 2, 3]) == 14


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=6), st.integers(1, 6))
def test_newton_identities(values, k):
    # k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
    rhs = sum((-1) ** (i - 1) * elementary_symmetric(k - i, values) * power_sum(i, values) for i in range(1, k + 1))
    assert k * elementary_symmetric(k, values) == rhs


def test_parse_partition():
    assert parse_partition("3, 1,2") == Partition((3, 2, 1))
    for bad in ("", "a,b", "2,0"):
        with pytest.raises(ValueError):
            parse_partition(bad)
