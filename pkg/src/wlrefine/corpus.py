"""Seeded graph collections shared by the selftest and the test suite."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from . import generators as gen
from .graph import Graph

DENSITIES = (0.15, 0.3, 0.5, 0.7)


def all_labeled_graphs(n: int) -> list[Graph]:
    """All 2^(n choose 2) graphs on ``n`` labeled vertices.

    Bit ``i`` of the mask selects the ``i``-th pair of
    ``itertools.combinations(range(n), 2)``.
    """
    pairs = list(combinations(range(n), 2))
    return [
        Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        for mask in range(1 << len(pairs))
    ]


def gnp_corpus(
    count: int, n_max: int, seed: int, densities: Sequence[float] = DENSITIES
) -> list[Graph]:
    """Graph ``i`` is ``gnp(1 + i % n_max, densities[i % len(densities)], seed + i)``."""
    return [
        gen.gnp(1 + i % n_max, densities[i % len(densities)], seed + i) for i in range(count)
    ]


def structured(max_n: int = 16) -> list[tuple[str, Graph]]:
    """Named symmetric graphs with at most ``max_n`` vertices."""
    out: list[tuple[str, Graph]] = [
        ("hex_chord", Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 5)])),
        ("c6", gen.cycle(6)),
        ("2c3", gen.disjoint_cycles([3, 3])),
        ("c6+2c3", gen.disjoint_cycles([6, 3, 3])),
        ("p5", gen.path(5)),
        ("k4", gen.complete(4)),
        ("empty4", Graph.from_edges(4, [])),
        ("k1", Graph.from_edges(1, [])),
        ("rook4x4", gen.rook4x4()),
        ("shrikhande", gen.shrikhande()),
    ]
    return [(name, g) for name, g in out if g.n <= max_n]
