"""k-dimensional Weisfeiler-Leman refinement over the dense tuple space V^k."""

from __future__ import annotations

from enum import IntEnum
from itertools import chain
from typing import Literal, Sequence

import numpy as np

from .graph import Graph
from .partition import (
    ClassRegistry,
    Coloring,
    RefinementTrace,
    RoundRecord,
    WorkList,
    argsort_words,
    group_starts,
    pack_words,
    radix_argsort,
    split_classes,
    word_starts,
)
from .validation import check_dimension, check_rule, check_tuple_space

Rule = Literal["columns", "recompute"]
RULES = ("columns", "recompute")


class PairRelation(IntEnum):
    EQUAL = 0
    ADJACENT = 1
    NEITHER = 2


class TupleIndex:
    """Base-``n`` positional code for k-tuples, first coordinate most significant.

    Positions are 1-based, as in ``substitute(index, j, y)``.
    """

    def __init__(self, n: int, k: int) -> None:
        check_dimension(k)
        if n < 0:
            raise ValueError(f"negative vertex count {n}")
        self.n = n
        self.k = k
        self.weights = [n ** (k - 1 - j) for j in range(k)]
        self.size = n**k

    def _check_vertex(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise ValueError(f"coordinate {x} outside [0, {self.n})")

    def _check_position(self, j: int) -> None:
        if not 1 <= j <= self.k:
            raise ValueError(f"position {j} outside [1, {self.k}]")

    def encode(self, tup: Sequence[int]) -> int:
        if len(tup) != self.k:
            raise ValueError(f"expected a {self.k}-tuple, got length {len(tup)}")
        index = 0
        for x in tup:
            self._check_vertex(x)
            index = index * self.n + x
        return index

    def decode(self, index: int) -> tuple[int, ...]:
        if not 0 <= index < self.size:
            raise ValueError(f"index {index} outside [0, {self.size})")
        return tuple((index // w) % self.n for w in self.weights)

    def coordinate(self, index, j: int):
        """Coordinate ``j`` of ``index``; works elementwise on arrays."""
        self._check_position(j)
        return (index // self.weights[j - 1]) % self.n

    def substitute(self, index: int, j: int, y: int) -> int:
        """Index of the tuple with coordinate ``j`` replaced by ``y``."""
        self._check_position(j)
        self._check_vertex(y)
        if not 0 <= index < self.size:
            raise ValueError(f"index {index} outside [0, {self.size})")
        w = self.weights[j - 1]
        return index + (y - (index // w) % self.n) * w


def atomic_type(g: Graph, tup: Sequence[int]) -> tuple[PairRelation, ...]:
    """Relation of every coordinate pair ``i < j``, in lexicographic pair order."""
    out = []
    for i in range(len(tup)):
        for j in range(i + 1, len(tup)):
            a, b = tup[i], tup[j]
            if a == b:
                out.append(PairRelation.EQUAL)
            elif g.has_edge(a, b):
                out.append(PairRelation.ADJACENT)
            else:
                out.append(PairRelation.NEITHER)
    return tuple(out)


def adjacency_matrix(g: Graph) -> np.ndarray:
    mat = np.zeros((g.n, g.n), dtype=bool)
    for v, nbrs in enumerate(g.adj):
        mat[v, list(nbrs)] = True
    return mat


def atomic_coloring(g: Graph, k: int) -> np.ndarray:
    """Initial colors of all tuples, numbered by ascending atomic-type code."""
    index = TupleIndex(g.n, k)
    adj = adjacency_matrix(g)
    tuples = np.arange(index.size, dtype=np.int64)
    coords = [index.coordinate(tuples, j) for j in range(1, k + 1)]
    code = np.zeros(index.size, dtype=np.int64)
    for i in range(k):
        for j in range(i + 1, k):
            rel = np.where(
                coords[i] == coords[j],
                PairRelation.EQUAL,
                np.where(adj[coords[i], coords[j]], PairRelation.ADJACENT, PairRelation.NEITHER),
            )
            code = code * 3 + rel
    _, colors = np.unique(code, return_inverse=True)
    return colors.astype(np.int64).ravel()


def _word_layout(width: int, entry_bits: int) -> list[list[int]]:
    """Split column positions into consecutive runs that fit a 62-bit word."""
    per_word = max(1, 62 // entry_bits)
    return [list(range(i, min(width, i + per_word))) for i in range(0, width, per_word)]


def _pack_entries(entry, layout, entry_bits) -> list[np.ndarray]:
    """Fold column entries straight into packed words so no wide matrix exists."""
    words = []
    for positions in layout:
        word = None
        for i in positions:
            value = entry(i)
            word = value.astype(np.int64) if word is None else (word << entry_bits) | value
        words.append(word.ravel())
    return words


def _column_records(W, C, index, adj, layout, entry_bits):
    """Rule ``columns``: for each L-tuple ``w``, position ``j`` and vertex ``y``,
    the target ``v = w[j, y]`` receives the column of ``v`` at ``w_j``."""
    n, k = index.n, index.k
    ys = np.arange(n, dtype=np.int64)
    targets, parts = [], []
    cw = np.broadcast_to(C[W][:, None], (W.shape[0], n))
    for j in range(k):
        pj = index.weights[j]
        wj = (W // pj) % n
        V = (W - wj * pj)[:, None] + ys[None, :] * pj

        def entry(i, V=V, wj=wj, j=j):
            if i == j:
                return cw
            if i == k:
                return np.broadcast_to(adj[ys[None, :], wj[:, None]], V.shape)
            pi = index.weights[i]
            return C[V + (wj[:, None] - (V // pi) % n) * pi]

        targets.append(V.ravel())
        parts.append(_pack_entries(entry, layout, entry_bits))
    words = [np.concatenate([p[w] for p in parts]) for w in range(len(layout))]
    return np.concatenate(targets), words


def _recompute_records(W, C, index, adj, layout, entry_bits):
    """Rule ``recompute``: every j-neighbor of an L-tuple emits its full column multiset."""
    n, k = index.n, index.k
    ys = np.arange(n, dtype=np.int64)
    touched = []
    for j in range(k):
        pj = index.weights[j]
        wj = (W // pj) % n
        touched.append(((W - wj * pj)[:, None] + ys[None, :] * pj).ravel())
    T = np.unique(np.concatenate(touched))

    def entry(i):
        if i == k:
            return adj[T[:, None], ys[None, :]]
        pi = index.weights[i]
        ti = (T // pi) % n
        return C[T[:, None] + (ys[None, :] - ti[:, None]) * pi]

    return np.repeat(T, n), _pack_entries(entry, layout, entry_bits)


def order_by_signature(
    targets: np.ndarray, col_words: list[tuple[np.ndarray, int]], C: np.ndarray
):
    """Sort touched tuples by (old color, signature) and flag signature changes.

    ``col_words`` holds the packed column of every record as (word, bits).  The signature
    of a target is its multiset of received columns, written as a run-length
    list over column ids.  Targets are bucketed by run count, each bucket is
    radix-sorted on (old color, runs), and a final stable pass on old color
    interleaves the buckets.
    """
    total = targets.shape[0]
    if total == 0:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=bool)

    order = argsort_words(col_words, total)
    colid = np.empty(total, dtype=np.int64)
    colid[order] = np.cumsum(word_starts(col_words, order)) - 1
    del col_words, order

    pair_words = pack_words([targets, colid], [_bits(targets), _bits(colid)])
    order = argsort_words(pair_words, total)
    run_pos = np.flatnonzero(word_starts(pair_words, order))
    run_target = targets[order[run_pos]]
    run_col = colid[order[run_pos]]
    run_len = np.diff(np.append(run_pos, total))

    first_run = np.flatnonzero(group_starts(run_target))
    tuples = run_target[first_run]
    runs = np.diff(np.append(first_run, run_target.shape[0]))
    old = C[tuples]
    col_bits, len_bits, old_bits = _bits(run_col), _bits(run_len), _bits(old)

    pieces, piece_groups = [], []
    next_group = 0
    for count in np.unique(runs).tolist():
        sel = np.flatnonzero(runs == count)
        base = first_run[sel]
        columns_ = [old[sel]]
        bits = [old_bits]
        for r in range(count):
            columns_ += [run_col[base + r], run_len[base + r]]
            bits += [col_bits, len_bits]
        words = pack_words(columns_, bits)
        o = argsort_words(words, sel.shape[0])
        groups = np.cumsum(word_starts(words, o)) - 1 + next_group
        next_group = int(groups[-1]) + 1
        pieces.append(tuples[sel][o])
        piece_groups.append(groups)

    merged = np.concatenate(pieces)
    groups = np.concatenate(piece_groups)
    o = radix_argsort(C[merged])
    merged, groups = merged[o], groups[o]
    starts = np.ones(merged.shape[0], dtype=bool)
    starts[1:] = groups[1:] != groups[:-1]
    return merged, starts


def _bits(values: np.ndarray) -> int:
    return int(values.max()).bit_length() if values.size else 0


def refinek_stable(
    g: Graph,
    k: int,
    rule: Rule = "columns",
    *,
    snapshots: bool = False,
    audit: bool = False,
) -> tuple[Coloring, RefinementTrace]:
    """Stable coloring of all k-tuples of ``g``, from atomic types.

    Tuples are stored densely by :class:`TupleIndex`.  Every initial color
    starts on the work list, so round 1 recolors the whole tuple space;
    later rounds only touch j-neighbors of tuples whose class was split
    off in the previous round.  ``rule`` picks how touched tuples are
    re-signed: ``"columns"`` sends each target only the column containing
    the triggering tuple, ``"recompute"`` rebuilds the full column multiset.

    For ``k == 1`` a column also records whether the two vertices are
    adjacent; for larger ``k`` the column colors already imply it.
    """
    check_dimension(k)
    check_rule(rule)
    check_tuple_space(g.n, k)
    index = TupleIndex(g.n, k)
    size = index.size
    trace = RefinementTrace(np.zeros(size, dtype=np.int64), snapshots=[] if snapshots else None)
    if size == 0:
        return Coloring(np.zeros(0, dtype=np.int64), 0), trace

    adj = adjacency_matrix(g)
    C = atomic_coloring(g, k)
    num = int(C.max()) + 1
    registry = ClassRegistry(C, num)
    worklist = WorkList(range(num))
    make_records = _column_records if rule == "columns" else _recompute_records
    width = k + 1 if k == 1 else k

    while len(worklist):
        drained = worklist.drain()
        W = np.fromiter(
            chain.from_iterable(registry.members(c) for c in drained), dtype=np.int64
        )
        trace.l_appearances[W] += 1
        entry_bits = max(int(C.max()).bit_length(), 1)
        layout = _word_layout(width, entry_bits)
        targets, words = make_records(W, C, index, adj, layout, entry_bits)
        col_words = [(w, entry_bits * len(pos)) for w, pos in zip(words, layout)]
        l_count = int(W.shape[0])
        del W, words
        elements, starts = order_by_signature(targets, col_words, C)
        del col_words
        splits = split_classes(C, registry, elements.tolist(), starts.tolist(), worklist)
        trace.rounds.append(
            RoundRecord(
                drained=len(drained),
                l_elements=l_count,
                m_rows=int(targets.shape[0]),
                m_length=int(targets.shape[0]) * (1 + width),
                splits=splits,
            )
        )
        if snapshots:
            trace.snapshots.append(C.copy())
        if audit:
            registry.audit(C)

    return Coloring(C.copy(), registry.num_colors), trace
