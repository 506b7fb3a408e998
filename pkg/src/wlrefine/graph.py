"""Simple undirected graphs, text parsers and structural helpers."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

Text = Union[bytes, str]

_TOKEN_SEP = re.compile(r"[ \t]+")
_UINT = re.compile(r"[0-9]+\Z")


class GraphFormatError(ValueError):
    """Raised when graph text or an edge set violates the input contract."""


@dataclass(frozen=True)
class Graph:
    """Vertex count plus ascending, symmetric adjacency lists.

    Build instances through :meth:`from_edges` or the parsers; the
    constructor validates but never repairs its input.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphFormatError(f"negative vertex count {self.n}")
        if len(self.adj) != self.n:
            raise GraphFormatError(
                f"adjacency has {len(self.adj)} lists for {self.n} vertices"
            )
        for v, nbrs in enumerate(self.adj):
            prev = -1
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphFormatError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise GraphFormatError(f"self-loop at {v}")
                if u <= prev:
                    raise GraphFormatError(f"adjacency of {v} not strictly ascending")
                prev = u
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if not _contains(self.adj[u], v):
                    raise GraphFormatError(f"edge ({v}, {u}) is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, rejecting self-loops, duplicates and bad ids."""
        if n < 0:
            raise GraphFormatError(f"negative vertex count {n}")
        lists: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex id out of range in edge ({u}, {v})")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphFormatError(f"duplicate edge {key}")
            seen.add(key)
            lists[u].append(v)
            lists[v].append(u)
        return cls(n, tuple(tuple(sorted(a)) for a in lists))

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in ascending order."""
        return [(u, v) for u, nbrs in enumerate(self.adj) for v in nbrs if u < v]

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return _contains(self.adj[u], v)


def _contains(sorted_ids: Sequence[int], x: int) -> bool:
    lo, hi = 0, len(sorted_ids)
    while lo < hi:
        mid = (lo + hi) // 2
        if sorted_ids[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo < len(sorted_ids) and sorted_ids[lo] == x


def _decode(text: Text) -> str:
    if isinstance(text, str):
        text = text.encode("utf-8")
    try:
        return text.decode("ascii")
    except UnicodeDecodeError as exc:
        raise GraphFormatError(f"non-ASCII byte at offset {exc.start}") from None


def _uint(token: str, lineno: int) -> int:
    if not _UINT.match(token):
        raise GraphFormatError(f"line {lineno}: expected a non-negative integer, got {token!r}")
    return int(token)


def parse_edge_list(text: Text) -> Graph:
    """Parse the ``<n> <m>`` header plus ``m`` lines of 0-based ``<u> <v>`` pairs.

    ``#`` starts a comment running to the end of the line; lines that are
    empty after comment removal are skipped.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(_decode(text).split("\n"), start=1):
        line = raw.split("#", 1)[0].strip(" \t")
        if not line:
            continue
        tokens = _TOKEN_SEP.split(line)
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected 2 fields, got {len(tokens)}")
        a, b = _uint(tokens[0], lineno), _uint(tokens[1], lineno)
        if header is None:
            header = (a, b)
            continue
        if len(edges) == header[1]:
            raise GraphFormatError(f"line {lineno}: more than the declared {header[1]} edges")
        edges.append((a, b))
    if header is None:
        raise GraphFormatError("missing '<n> <m>' header")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"declared {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def parse_dimacs(text: Text) -> Graph:
    """Parse DIMACS ``p edge`` text with 1-based ``e u v`` lines."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(_decode(text).split("\n"), start=1):
        line = raw.strip(" \t")
        if not line or line[0] == "c" and (len(line) == 1 or line[1] in " \t"):
            continue
        tokens = _TOKEN_SEP.split(line)
        if tokens[0] == "p":
            if header is not None:
                raise GraphFormatError(f"line {lineno}: second problem line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise GraphFormatError(f"line {lineno}: expected 'p edge <n> <m>'")
            header = (_uint(tokens[2], lineno), _uint(tokens[3], lineno))
        elif tokens[0] == "e":
            if header is None:
                raise GraphFormatError(f"line {lineno}: edge before problem line")
            if len(tokens) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>'")
            u, v = _uint(tokens[1], lineno), _uint(tokens[2], lineno)
            if u == 0 or v == 0:
                raise GraphFormatError(f"line {lineno}: DIMACS vertex ids are 1-based")
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"line {lineno}: unknown line type {tokens[0]!r}")
    if header is None:
        raise GraphFormatError("missing 'p edge <n> <m>' line")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"declared {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> bytes:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return ("\n".join(lines) + "\n").encode("ascii")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g`` keeps its ids, ``h`` is shifted up by ``g.n``."""
    off = g.n
    shifted = tuple(tuple(u + off for u in nbrs) for nbrs in h.adj)
    return Graph(g.n + h.n, g.adj + shifted)


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertex ``v`` as ``perm[v]``."""
    if len(perm) != g.n:
        raise ValueError(f"permutation has length {len(perm)}, graph has {g.n} vertices")
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation of the vertex ids")
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


def invert_permutation(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return inv
