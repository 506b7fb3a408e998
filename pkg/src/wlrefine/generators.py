"""Deterministic graph families used by the tests, selftest and bench.

Random graphs come from :class:`XorShift64Star` so that a ``(n, p, seed)``
triple names one graph bit-for-bit on every platform.
"""

from __future__ import annotations

from typing import Any, Sequence

from .graph import Graph

_MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    """Marsaglia xorshift (shifts 12, 25, 27) with the 2545F4914F6CDD1D multiplier.

    The 64-bit state is one splitmix64 step of the seed, so every integer
    seed (including 0) gives a valid non-zero state.
    """

    def __init__(self, seed: int) -> None:
        state = splitmix64(seed & _MASK64)
        self.state = state or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & _MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK64

    def random(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError(f"complete graph needs n >= 0, got {n}")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def disjoint_cycles(lengths: Sequence[int]) -> Graph:
    edges = []
    off = 0
    for length in lengths:
        if length < 3:
            raise ValueError(f"cycle length must be >= 3, got {length}")
        edges.extend((off + i, off + (i + 1) % length) for i in range(length))
        off += length
    return Graph.from_edges(off, edges)


def _z4x4(connected) -> Graph:
    edges = []
    for a in range(16):
        for b in range(a + 1, 16):
            if connected(divmod(a, 4), divmod(b, 4)):
                edges.append((a, b))
    return Graph.from_edges(16, edges)


def rook4x4() -> Graph:
    """4x4 rook's graph: cells of Z4 x Z4 sharing a row or a column."""
    return _z4x4(lambda p, q: p[0] == q[0] or p[1] == q[1])


_SHRIKHANDE_STEPS = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}


def shrikhande() -> Graph:
    """Cayley graph of Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}."""
    return _z4x4(
        lambda p, q: ((q[0] - p[0]) % 4, (q[1] - p[1]) % 4) in _SHRIKHANDE_STEPS
    )


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi graph; pairs ``u < v`` are drawn in row-major order."""
    if n < 0:
        raise ValueError(f"gnp needs n >= 0, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"gnp needs 0 <= p <= 1, got {p}")
    rng = XorShift64Star(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_permutation(n: int, seed: int) -> list[int]:
    """Fisher-Yates shuffle driven by :class:`XorShift64Star`."""
    rng = XorShift64Star(seed)
    perm = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    return perm


FAMILIES = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "disjoint_cycles": disjoint_cycles,
    "rook4x4": rook4x4,
    "shrikhande": shrikhande,
    "gnp": gnp,
}


def generate(family: str, **params: Any) -> Graph:
    try:
        build = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown graph family {family!r}") from None
    try:
        return build(**params)
    except TypeError as exc:
        raise ValueError(f"invalid parameters for {family}: {exc}") from None
