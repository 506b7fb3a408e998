"""Shared refinement machinery: class registry, work list, radix sorts, splits.

Both refinement engines keep their colors in a dense ``color_of`` array and
mirror it in a :class:`ClassRegistry`, which stores for every color ``c`` its
size ``S[c]`` and a doubly-linked member list ``D[c]``.  A round produces a
list of touched elements sorted by (old color, signature); :func:`split_classes`
turns that list into new classes, keeping the largest part of every split
class under its old id and queuing the rest on the :class:`WorkList`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, MutableSequence, Sequence

import numpy as np

_NIL = -1


@dataclass
class Coloring:
    """Dense map from element index to a contiguous color id."""

    color_of: np.ndarray
    num_colors: int

    @property
    def element_count(self) -> int:
        return int(self.color_of.shape[0])

    def sizes(self) -> np.ndarray:
        return np.bincount(self.color_of, minlength=self.num_colors)

    def partition(self) -> tuple[tuple[int, ...], ...]:
        return snapshot_partition(self.color_of)


class ClassRegistry:
    """Per-color sizes and intrusive doubly-linked member lists.

    Element ``v`` owns slot ``v`` of the link arrays, so the position handle
    ``P[v]`` is the slot itself and unlinking is O(1) without a search.
    """

    def __init__(self, color_of: Sequence[int], num_colors: int) -> None:
        count = len(color_of)
        self.size: list[int] = [0] * num_colors
        self._head: list[int] = [_NIL] * num_colors
        self._next: list[int] = [_NIL] * count
        self._prev: list[int] = [_NIL] * count
        colors = [int(c) for c in color_of]
        for v in range(count - 1, -1, -1):
            self._push(v, colors[v])

    @property
    def num_colors(self) -> int:
        return len(self.size)

    def new_color(self) -> int:
        self.size.append(0)
        self._head.append(_NIL)
        return len(self.size) - 1

    def _push(self, v: int, c: int) -> None:
        first = self._head[c]
        self._next[v] = first
        self._prev[v] = _NIL
        if first != _NIL:
            self._prev[first] = v
        self._head[c] = v
        self.size[c] += 1

    def _unlink(self, v: int, c: int) -> None:
        before, after = self._prev[v], self._next[v]
        if before != _NIL:
            self._next[before] = after
        else:
            self._head[c] = after
        if after != _NIL:
            self._prev[after] = before
        self.size[c] -= 1

    def move(self, v: int, old: int, new: int) -> None:
        self._unlink(v, old)
        self._push(v, new)

    def members(self, c: int) -> Iterator[int]:
        v = self._head[c]
        while v != _NIL:
            yield v
            v = self._next[v]

    def audit(self, color_of: Sequence[int]) -> None:
        """Check sizes, memberships and links against ``color_of``.

        Raises ``AssertionError`` on the first inconsistency.
        """
        seen = 0
        for c in range(self.num_colors):
            count = 0
            prev = _NIL
            for v in self.members(c):
                assert int(color_of[v]) == c, f"element {v} listed under {c}"
                assert self._prev[v] == prev, f"broken back link at {v}"
                prev = v
                count += 1
            assert count == self.size[c], f"S[{c}]={self.size[c]} but D[{c}] has {count}"
            assert count > 0, f"color {c} is empty"
            seen += count
        assert seen == len(color_of), "registry does not cover every element"


class WorkList:
    """Queue of color ids awaiting processing; each id at most once."""

    def __init__(self, colors: Iterable[int] = ()) -> None:
        self._queue: deque[int] = deque()
        self._queued: set[int] = set()
        for c in colors:
            self.push(c)

    def push(self, c: int) -> None:
        if c in self._queued:
            raise ValueError(f"color {c} is already on the work list")
        self._queued.add(c)
        self._queue.append(c)

    def drain(self) -> list[int]:
        out = list(self._queue)
        self._queue.clear()
        self._queued.clear()
        return out

    def __len__(self) -> int:
        return len(self._queue)

    def __contains__(self, c: object) -> bool:
        return c in self._queued


@dataclass
class SplitEvent:
    parent: int
    retained_size: int
    residual_retained: bool
    fresh: list[tuple[int, int]]  # (new color, size) in allocation order

    @property
    def part_sizes(self) -> list[int]:
        return [self.retained_size] + [s for _, s in self.fresh]


@dataclass
class RoundRecord:
    drained: int
    l_elements: int
    m_rows: int
    m_length: int
    splits: list[SplitEvent] = field(default_factory=list)


@dataclass
class RefinementTrace:
    l_appearances: np.ndarray
    rounds: list[RoundRecord] = field(default_factory=list)
    snapshots: list[np.ndarray] | None = None

    @property
    def rounds_executed(self) -> int:
        return len(self.rounds)

    @property
    def splitting_rounds(self) -> int:
        return sum(1 for r in self.rounds if r.splits)

    @property
    def max_l_appearances(self) -> int:
        return int(self.l_appearances.max()) if self.l_appearances.size else 0

    @property
    def m_rows_total(self) -> int:
        return sum(r.m_rows for r in self.rounds)


def radix_sort_rows(rows: Iterable[Sequence[int]], alphabet_bound: int) -> list[tuple[int, ...]]:
    """Lexicographically sort variable-length integer rows in O(total length + bound).

    A row that is a proper prefix of another sorts first, and equal rows keep
    their input order.  This is the classic length-bucketed radix sort: rows
    join the queue at the pass for their last position, and every pass only
    visits the symbols that actually occur at that position.
    """
    table = [tuple(r) for r in rows]
    if not table:
        return []
    for r in table:
        for s in r:
            if not 0 <= s < alphabet_bound:
                raise ValueError(f"row entry {s} outside [0, {alphabet_bound})")
    longest = max(len(r) for r in table)
    by_length: list[list[tuple[int, ...]]] = [[] for _ in range(longest + 1)]
    for r in table:
        by_length[len(r)].append(r)

    buckets: list[list] = [[] for _ in range(alphabet_bound)]
    for r in table:
        for pos, s in enumerate(r):
            buckets[s].append(pos)
    symbols_at: list[list[int]] = [[] for _ in range(longest)]
    for s, positions in enumerate(buckets):
        for pos in positions:
            present = symbols_at[pos]
            if not present or present[-1] != s:
                present.append(s)
        if positions:
            buckets[s] = []

    queue: list[tuple[int, ...]] = []
    for length in range(longest, 0, -1):
        pos = length - 1
        for r in by_length[length]:
            buckets[r[pos]].append(r)
        for r in queue:
            buckets[r[pos]].append(r)
        queue = []
        for s in symbols_at[pos]:
            queue.extend(buckets[s])
            buckets[s] = []
    return by_length[0] + queue


def pack_words(columns: Sequence[np.ndarray], bits: Sequence[int]) -> list[tuple[np.ndarray, int]]:
    """Pack non-negative 1-D columns, most significant first, into <=62-bit words.

    ``bits[i]`` must cover every value of ``columns[i]``; zero-width columns
    are dropped.  Comparing the word lists lexicographically is the same as
    comparing the original rows.
    """
    words: list[tuple[np.ndarray, int]] = []
    word, word_bits = None, 0
    for column, width in zip(columns, bits):
        if width <= 0:
            continue
        column = np.asarray(column, dtype=np.int64)
        if word is None or word_bits + width > 62:
            if word is not None:
                words.append((word, word_bits))
            word, word_bits = column.copy(), width
        else:
            word <<= width
            word |= column
            word_bits += width
    if word is not None:
        words.append((word, word_bits))
    return words


def argsort_words(words: Sequence[tuple[np.ndarray, int]], count: int) -> np.ndarray:
    """Stable LSD radix argsort over packed words, 16 bits per pass.

    numpy sorts ``uint16`` keys with a counting radix sort, so every pass is
    linear in ``count``.
    """
    order = None
    for word, bits in reversed(words):
        for shift in range(0, bits, 16):
            current = word if order is None else word[order]
            digit = ((current >> shift) & 0xFFFF).astype(np.uint16)
            step = np.argsort(digit, kind="stable")
            order = step if order is None else order[step]
    if order is None:
        return np.arange(count, dtype=np.int64)
    return order.astype(np.int64, copy=False)


def word_starts(words: Sequence[tuple[np.ndarray, int]], order: np.ndarray) -> np.ndarray:
    """Mask of sorted positions whose packed row differs from the previous one."""
    starts = np.zeros(order.shape[0], dtype=bool)
    if order.shape[0]:
        starts[0] = True
    for word, _ in words:
        w = word[order]
        starts[1:] |= w[1:] != w[:-1]
    return starts


def radix_argsort(keys: np.ndarray) -> np.ndarray:
    """Stable LSD radix argsort of fixed-width non-negative integer rows.

    Constant columns are dropped and adjacent narrow columns share a packed
    word, which leaves the order unchanged and cuts the number of passes.
    """
    keys = np.asarray(keys, dtype=np.int64)
    if keys.ndim == 1:
        keys = keys[:, None]
    count, width = keys.shape
    if count <= 1:
        return np.arange(count, dtype=np.int64)
    if keys.min() < 0:
        raise ValueError("radix_argsort needs non-negative keys")
    lows, highs = keys.min(axis=0), keys.max(axis=0)
    bits = [0 if lows[c] == highs[c] else int(highs[c]).bit_length() for c in range(width)]
    return argsort_words(pack_words([keys[:, c] for c in range(width)], bits), count)


def group_starts(sorted_keys: np.ndarray) -> np.ndarray:
    """Boolean mask marking rows that differ from their predecessor."""
    if sorted_keys.ndim == 1:
        sorted_keys = sorted_keys[:, None]
    starts = np.ones(sorted_keys.shape[0], dtype=bool)
    if sorted_keys.shape[0] > 1:
        starts[1:] = np.any(sorted_keys[1:] != sorted_keys[:-1], axis=1)
    return starts


def split_classes(
    color_of: MutableSequence[int],
    registry: ClassRegistry,
    elements: Sequence[int],
    part_start: Sequence[bool],
    worklist: WorkList,
) -> list[SplitEvent]:
    """Apply one round of splits.

    ``elements`` holds every touched element, grouped contiguously by old
    color and, within a color, by new signature; ``part_start[i]`` is true
    where a new signature group begins.  Members of a color missing from
    ``elements`` form its residual part, which sorts before the touched parts.

    The largest part keeps the old id (the residual wins ties, then the
    earliest part); every other part gets the next fresh id and is queued.
    A retained residual is never walked.
    """
    events: list[SplitEvent] = []
    total = len(elements)
    i = 0
    while i < total:
        c = int(color_of[elements[i]])
        parts: list[list[int]] = []
        j = i
        while j < total and int(color_of[elements[j]]) == c:
            if j == i or part_start[j]:
                parts.append([])
            parts[-1].append(int(elements[j]))
            j += 1
        residual = registry.size[c] - (j - i)
        if residual < 0:
            raise AssertionError(f"color {c} touched more often than its size")
        if len(parts) + (residual > 0) < 2:
            i = j
            continue

        keep = -1
        best = residual
        for idx, part in enumerate(parts):
            if len(part) > best:
                keep, best = idx, len(part)

        fresh: list[tuple[int, int]] = []
        if residual > 0 and keep != -1:
            touched = set(elements[i:j])
            rest = [v for v in registry.members(c) if v not in touched]
            fresh.append(_relocate(rest, c, color_of, registry, worklist))
        for idx, part in enumerate(parts):
            if idx != keep:
                fresh.append(_relocate(part, c, color_of, registry, worklist))
        events.append(SplitEvent(c, best, keep == -1, fresh))
        i = j
    return events


def _relocate(
    part: Sequence[int],
    old: int,
    color_of: MutableSequence[int],
    registry: ClassRegistry,
    worklist: WorkList,
) -> tuple[int, int]:
    new = registry.new_color()
    for v in part:
        registry.move(v, old, new)
        color_of[v] = new
    worklist.push(new)
    return new, len(part)


def snapshot_partition(color_of: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Label-free form: sorted member lists, ordered by smallest member."""
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(np.asarray(color_of).tolist()):
        classes.setdefault(c, []).append(v)
    return tuple(tuple(members) for members in classes.values())


def relabel_by_first_occurrence(color_of: Sequence[int]) -> np.ndarray:
    """Renumber colors 0, 1, ... in order of first appearance."""
    seen: dict[int, int] = {}
    out = np.empty(len(color_of), dtype=np.int64)
    for v, c in enumerate(np.asarray(color_of).tolist()):
        out[v] = seen.setdefault(c, len(seen))
    return out


def refines(fine: Sequence[int], coarse: Sequence[int]) -> bool:
    """True when every class of ``fine`` lies inside one class of ``coarse``."""
    parent: dict[int, int] = {}
    for f, c in zip(np.asarray(fine).tolist(), np.asarray(coarse).tolist()):
        if parent.setdefault(f, c) != c:
            return False
    return True
