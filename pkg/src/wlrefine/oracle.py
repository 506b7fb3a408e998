"""Naive fixpoint refinement, used as ground truth.

Every round recomputes every signature from scratch and renumbers colors by
sorted signature.  Nothing here touches the work list, the class registry
or the radix sorts.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .graph import Graph
from .validation import check_dimension, check_tuple_space


def _renumber(signatures: Sequence) -> list[int]:
    ids = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
    return [ids[sig] for sig in signatures]


def naive_round_1(g: Graph, colors: Sequence[int]) -> list[int]:
    """Recolor every vertex by (own color, sorted neighbor colors)."""
    return _renumber(
        [(colors[v], tuple(sorted(colors[u] for u in g.adj[v]))) for v in range(g.n)]
    )


def _tuples(n: int, k: int) -> list[tuple[int, ...]]:
    return list(product(range(n), repeat=k))


def naive_atomic(g: Graph, k: int) -> list[int]:
    """Colors from the equality and adjacency pattern of each coordinate pair."""
    adjacent = [set(nbrs) for nbrs in g.adj]

    def pattern(t):
        return tuple(
            "=" if t[i] == t[j] else ("~" if t[j] in adjacent[t[i]] else ".")
            for i in range(k)
            for j in range(i + 1, k)
        )

    return _renumber([pattern(t) for t in _tuples(g.n, k)])


def naive_round_k(g: Graph, k: int, colors: Sequence[int]) -> list[int]:
    """Recolor every k-tuple by (own color, sorted multiset of its columns).

    The column of ``v`` at ``u`` lists the colors of ``v`` with each
    coordinate in turn replaced by ``u``.  For ``k == 1`` it also carries
    the adjacency bit of ``(v_1, u)``.
    """
    n = g.n
    weights = [n ** (k - 1 - j) for j in range(k)]
    adjacent = [set(nbrs) for nbrs in g.adj]
    signatures = []
    for index, t in enumerate(_tuples(n, k)):
        columns = []
        for u in range(n):
            col = tuple(colors[index + (u - t[j]) * weights[j]] for j in range(k))
            if k == 1:
                col += (int(u in adjacent[t[0]]),)
            columns.append(col)
        columns.sort()
        signatures.append((colors[index], tuple(columns)))
    return _renumber(signatures)


def _fixpoint(step, colors: list[int]) -> tuple[list[int], list[list[int]]]:
    history = []
    while True:
        new = step(colors)
        history.append(new)
        if len(set(new)) == len(set(colors)):
            return new, history
        colors = new


def naive_stable_1(g: Graph) -> tuple[list[int], list[list[int]]]:
    """Stable vertex coloring from one color, plus the coloring after each round.

    The last round in the history is the one that changed nothing.
    """
    if g.n == 0:
        return [], []
    return _fixpoint(lambda c: naive_round_1(g, c), [0] * g.n)


def naive_stable_k(g: Graph, k: int) -> tuple[list[int], list[list[int]]]:
    """Stable k-tuple coloring from atomic types, plus per-round history."""
    check_dimension(k)
    check_tuple_space(g.n, k)
    if g.n == 0:
        return [], []
    return _fixpoint(lambda c: naive_round_k(g, k, c), naive_atomic(g, k))
