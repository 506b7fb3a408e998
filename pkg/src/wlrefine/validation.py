"""Input checks shared by the engines, the estimators and the CLI."""

from __future__ import annotations

from typing import Any, Iterable

from .graph import Graph

MAX_TUPLE_BITS = 40


class SizeLimitError(ValueError):
    """The tuple space V^k is too large to allocate."""


def check_dimension(k: Any) -> int:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError(f"dimension k must be an integer >= 1, got {k!r}")
    return k


def check_rule(rule: str) -> str:
    if rule not in ("columns", "recompute"):
        raise ValueError(f"rule must be 'columns' or 'recompute', got {rule!r}")
    return rule


def check_algorithm(algorithm: str) -> str:
    if algorithm not in ("worklist", "naive"):
        raise ValueError(f"algorithm must be 'worklist' or 'naive', got {algorithm!r}")
    return algorithm


def check_tuple_space(n: int, k: int, max_bits: int = MAX_TUPLE_BITS) -> int:
    """Return ``n**k``, refusing spaces above ``2**max_bits`` tuples."""
    size = n**k
    if size > 1 << max_bits:
        raise SizeLimitError(
            f"n={n}, k={k} needs {size} tuples (about 2^{(size - 1).bit_length()}); "
            f"the limit is 2^{max_bits}"
        )
    return size


def check_graph(g: Any) -> Graph:
    if not isinstance(g, Graph):
        raise TypeError(f"expected a Graph, got {type(g).__name__}")
    return g


def check_graphs(graphs: Iterable[Any]) -> list[Graph]:
    out = [check_graph(g) for g in graphs]
    if not out:
        raise ValueError("expected at least one graph")
    return out
