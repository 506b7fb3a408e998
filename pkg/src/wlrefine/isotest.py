"""Deciding whether k-WL tells two graphs apart."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .graph import Graph, disjoint_union
from .validation import check_dimension, check_rule, check_tuple_space
from .wlk import Rule, TupleIndex, refinek_stable


class Verdict(str, Enum):
    DISTINGUISHED = "DISTINGUISHED"
    NOT_DISTINGUISHED = "NOT_DISTINGUISHED"


@dataclass(frozen=True)
class Evidence:
    color: int
    count_g: int
    count_h: int


@dataclass(frozen=True)
class DistinguishResult:
    verdict: Verdict
    k: int
    evidence: Evidence | None = None
    stats: dict = field(default_factory=dict)

    @property
    def distinguished(self) -> bool:
        return self.verdict is Verdict.DISTINGUISHED


def block_tuples(index: TupleIndex, lo: int, hi: int) -> np.ndarray:
    """Indices of tuples whose coordinates all lie in ``[lo, hi)``."""
    block = np.arange(lo, hi, dtype=np.int64)
    out = np.zeros(1, dtype=np.int64)
    for w in index.weights:
        out = (out[:, None] + block[None, :] * w).ravel()
    return out if hi > lo else np.zeros(0, dtype=np.int64)


def distinguish(g: Graph, h: Graph, k: int, rule: Rule = "columns") -> DistinguishResult:
    """Refine the disjoint union and compare the stable-color multisets of
    the tuples lying wholly inside ``g`` and wholly inside ``h``.

    Mixed tuples count for neither side.  Evidence is the smallest color
    id whose multiplicities differ.
    """
    check_dimension(k)
    check_rule(rule)
    union = disjoint_union(g, h)
    check_tuple_space(union.n, k)
    coloring, trace = refinek_stable(union, k, rule)
    index = TupleIndex(union.n, k)
    colors = coloring.color_of
    side_g = Counter(colors[block_tuples(index, 0, g.n)].tolist())
    side_h = Counter(colors[block_tuples(index, g.n, union.n)].tolist())
    stats = {"rounds": trace.rounds_executed, "classes": coloring.num_colors}
    if side_g == side_h:
        return DistinguishResult(Verdict.NOT_DISTINGUISHED, k, None, stats)
    witness = min(c for c in side_g.keys() | side_h.keys() if side_g[c] != side_h[c])
    return DistinguishResult(
        Verdict.DISTINGUISHED, k, Evidence(witness, side_g[witness], side_h[witness]), stats
    )


def escalate(g: Graph, h: Graph, k_max: int, rule: Rule = "columns") -> DistinguishResult:
    """Smallest ``k <= k_max`` that distinguishes, else the verdict at ``k_max``."""
    check_dimension(k_max)
    result = None
    for k in range(1, k_max + 1):
        result = distinguish(g, h, k, rule)
        if result.distinguished:
            break
    return result
