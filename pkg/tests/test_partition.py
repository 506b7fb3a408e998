import random
import time

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wlrefine.partition import (
    ClassRegistry,
    WorkList,
    radix_argsort,
    radix_sort_rows,
    refines,
    snapshot_partition,
    split_classes,
)

rows_strategy = st.lists(st.lists(st.integers(0, 6), max_size=5), max_size=40)


def test_radix_sort_examples():
    assert radix_sort_rows([[2, 1], [1, 3], [1, 2]], 4) == [(1, 2), (1, 3), (2, 1)]
    assert radix_sort_rows([[1], [1, 0]], 2) == [(1,), (1, 0)]
    assert radix_sort_rows([[1, 0], [1]], 2) == [(1,), (1, 0)]
    assert radix_sort_rows([[], [0], []], 1) == [(), (), (0,)]
    assert radix_sort_rows([], 5) == []


def test_radix_sort_rejects_out_of_range():
    with pytest.raises(ValueError, match="outside"):
        radix_sort_rows([[0, 5]], 5)
    with pytest.raises(ValueError, match="outside"):
        radix_sort_rows([[-1]], 5)


def test_radix_sort_matches_comparison_sort_on_10000_rows():
    rng = random.Random(2024)
    rows = [[rng.randrange(50) for _ in range(rng.randrange(0, 8))] for _ in range(10_000)]
    assert radix_sort_rows(rows, 50) == sorted(tuple(r) for r in rows)


@settings(max_examples=200, deadline=None)
@given(rows_strategy)
def test_radix_sort_property(rows):
    assert radix_sort_rows(rows, 7) == sorted(tuple(r) for r in rows)


def _best_time(fn, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def test_radix_sort_time_is_linear_in_total_length():
    rng = random.Random(7)
    small = [[rng.randrange(100) for _ in range(6)] for _ in range(20_000)]
    large = small * 4
    t_small = _best_time(lambda: radix_sort_rows(small, 100))
    t_large = _best_time(lambda: radix_sort_rows(large, 100))
    assert t_large / t_small < 6.0


def test_radix_sort_large_alphabet_few_rows_is_cheap():
    rows = [[999_999, 3], [5, 999_998], [5, 1]]
    elapsed = _best_time(lambda: radix_sort_rows(rows, 1_000_000), repeat=1)
    assert radix_sort_rows(rows, 1_000_000) == [(5, 1), (5, 999_998), (999_999, 3)]
    assert elapsed < 2.0


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 70_000), st.integers(0, 3), st.integers(0, 9)), max_size=60))
def test_radix_argsort_matches_lexsort(rows):
    keys = np.array(rows, dtype=np.int64).reshape(-1, 3)
    expected = np.lexsort(keys.T[::-1]) if len(rows) else np.zeros(0, dtype=np.int64)
    assert radix_argsort(keys).tolist() == expected.tolist()


def test_registry_tracks_moves():
    colors = [0, 0, 1, 0, 1]
    reg = ClassRegistry(colors, 2)
    assert reg.size == [3, 2]
    assert sorted(reg.members(0)) == [0, 1, 3]
    new = reg.new_color()
    reg.move(1, 0, new)
    colors[1] = new
    reg.audit(colors)
    assert reg.size == [2, 2, 1]
    assert list(reg.members(new)) == [1]


def test_registry_audit_detects_drift():
    colors = [0, 0, 1]
    reg = ClassRegistry(colors, 2)
    colors[0] = 1
    with pytest.raises(AssertionError):
        reg.audit(colors)


def test_worklist():
    wl = WorkList([3, 1])
    assert 3 in wl and len(wl) == 2
    with pytest.raises(ValueError):
        wl.push(1)
    assert wl.drain() == [3, 1]
    assert len(wl) == 0 and 3 not in wl


class CountingRegistry(ClassRegistry):
    def __init__(self, *args):
        super().__init__(*args)
        self.walked = []

    def members(self, c):
        self.walked.append(c)
        return super().members(c)


def _split(colors, num, elements, starts):
    colors = list(colors)
    reg = CountingRegistry(colors, num)
    wl = WorkList()
    events = split_classes(colors, reg, elements, starts, wl)
    walked = list(reg.walked)
    reg.audit(colors)
    reg.walked = walked
    return colors, reg, wl.drain(), events


def test_split_largest_part_keeps_color():
    colors, _, queued, events = _split([0, 0, 0, 0], 1, [0, 1, 2, 3], [True, False, True, True])
    assert colors == [0, 0, 1, 2]
    assert queued == [1, 2]
    assert events[0].part_sizes == [2, 1, 1]


def test_split_identity_when_one_part_covers_class():
    colors, _, queued, events = _split([0, 0, 0], 1, [0, 1, 2], [True, False, False])
    assert colors == [0, 0, 0] and queued == [] and events == []


def test_split_retained_residual_is_not_walked():
    colors, reg, queued, events = _split([0] * 5, 1, [3, 4], [True, True])
    assert colors == [0, 0, 0, 1, 2]
    assert queued == [1, 2]
    assert reg.walked == []
    assert events[0].residual_retained
    # oracle: group the five elements by their signature directly
    signature = {0: "r", 1: "r", 2: "r", 3: "a", 4: "b"}
    expected = snapshot_partition([ord(signature[v]) for v in range(5)])
    assert snapshot_partition(colors) == expected


def test_split_residual_wins_ties():
    colors, _, queued, _ = _split([0] * 4, 1, [2, 3], [True, False])
    assert colors == [0, 0, 1, 1] and queued == [1]


def test_split_first_part_wins_ties_without_residual():
    colors, _, _, _ = _split([0] * 4, 1, [2, 3, 0, 1], [True, False, True, False])
    assert colors == [1, 1, 0, 0]


def test_split_moves_small_residual():
    colors, reg, queued, events = _split([0] * 5, 1, [0, 1, 2, 3], [True, False, False, True])
    # residual {4} comes first in scan order and gets the first fresh id
    assert colors == [0, 0, 0, 2, 1]
    assert queued == [1, 2]
    assert reg.walked == [0]
    assert not events[0].residual_retained


def test_split_handles_several_classes_and_keeps_ids_contiguous():
    colors, reg, queued, _ = _split(
        [0, 1, 0, 1, 0, 1], 2, [0, 2, 4, 1, 3], [True, True, False, True, True]
    )
    assert sorted(set(colors)) == list(range(reg.num_colors))
    assert snapshot_partition(colors) == ((0,), (1,), (2, 4), (3,), (5,))


def test_snapshot_partition_examples():
    assert snapshot_partition([0, 1, 0]) == ((0, 2), (1,))
    assert snapshot_partition([5, 5, 5]) == ((0, 1, 2),)
    assert snapshot_partition([]) == ()


def test_refines():
    assert refines([0, 1, 2], [0, 0, 1])
    assert not refines([0, 0, 1], [0, 1, 1])
