"""Oracle-equivalence and invariant sweep behind ``wlrefine selftest``."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO


from . import generators as gen
from .corpus import DENSITIES, all_labeled_graphs, structured
from .graph import Graph, parse_edge_list, permute, to_edge_list
from .isotest import distinguish
from .oracle import naive_round_1, naive_round_k, naive_stable_1, naive_stable_k
from .partition import refines, snapshot_partition
from .wl1 import refine1_stable
from .wlk import RULES, atomic_coloring, refinek_stable


@dataclass
class Check:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    def record(self, ok: bool, label: str) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(label)

    @property
    def passed(self) -> bool:
        return not self.failures


def l_bound(n: int, k: int) -> int:
    return 1 + k * int(math.floor(math.log2(n))) if n else 0


def run_violations(g: Graph, k: int, coloring, trace) -> list[str]:
    """Invariant breaches of one work-list run (trace must hold snapshots)."""
    problems = []
    if g.n and trace.max_l_appearances > l_bound(g.n, k):
        problems.append(f"L appearances {trace.max_l_appearances} > {l_bound(g.n, k)}")
    prev = atomic_coloring(g, k)
    for i, snap in enumerate(trace.snapshots or []):
        if not refines(snap, prev):
            problems.append(f"round {i + 1} merged classes")
        prev = snap
    for event in (s for r in trace.rounds for s in r.splits):
        if any(size > event.retained_size for _, size in event.fresh):
            problems.append(f"split of {event.parent} retained a smaller part")
    colors = coloring.color_of.tolist()
    again = naive_round_1(g, colors) if k == 1 else naive_round_k(g, k, colors)
    if len(set(again)) != coloring.num_colors:
        problems.append("final coloring is not stable")
    return problems


def _gnp_graphs(sizes: Sequence[int], seed: int, per_density: int = 3) -> list[tuple[str, Graph]]:
    out = []
    for n in sizes:
        for p in DENSITIES:
            for s in range(seed, seed + per_density):
                out.append((f"gnp({n},{p},{s})", gen.gnp(n, p, s)))
    return out


def run_selftest(k_max: int = 2, seed: int = 7, sizes: Sequence[int] = (4, 6, 8)) -> list[Check]:
    checks: list[Check] = []
    base = [(f"all4#{i}", g) for i, g in enumerate(all_labeled_graphs(4))]
    base += structured() + _gnp_graphs(sizes, seed)

    trip = Check("edge-list round trip")
    for name, g in base:
        trip.record(parse_edge_list(to_edge_list(g)) == g, name)
    checks.append(trip)

    oracle1 = Check("oracle k=1")
    inv1 = Check("invariants k=1")
    equi = Check("equivariance k=1")
    for i, (name, g) in enumerate(base):
        coloring, trace = refine1_stable(g, snapshots=True)
        expected, _ = naive_stable_1(g)
        oracle1.record(coloring.partition() == snapshot_partition(expected), name)
        inv1.record(not run_violations(g, 1, coloring, trace), name)
        perm = gen.random_permutation(g.n, seed + i)
        moved, _ = refine1_stable(permute(g, perm))
        image = sorted(tuple(sorted(perm[v] for v in cls)) for cls in coloring.partition())
        equi.record(sorted(moved.partition()) == image, name)
    checks += [oracle1, inv1, equi]

    for k in range(1, k_max + 1):
        graphs = [(name, g) for name, g in base if g.n**k * g.n <= 40_000]
        for rule in RULES:
            oracle = Check(f"oracle k={k} rule={rule}")
            inv = Check(f"invariants k={k} rule={rule}")
            for name, g in graphs:
                coloring, trace = refinek_stable(g, k, rule, snapshots=True)
                expected, _ = naive_stable_k(g, k)
                oracle.record(coloring.partition() == snapshot_partition(expected), name)
                inv.record(not run_violations(g, k, coloring, trace), name)
            checks += [oracle, inv]

    ladder = Check("distinguishing")
    c6, two_c3 = gen.cycle(6), gen.disjoint_cycles([3, 3])
    ladder.record(not distinguish(c6, two_c3, 1).distinguished, "C6 vs 2C3 at k=1")
    if k_max >= 2:
        ladder.record(distinguish(c6, two_c3, 2).distinguished, "C6 vs 2C3 at k=2")
    for i, (name, g) in enumerate(_gnp_graphs([6], seed, per_density=2)):
        h = permute(g, gen.random_permutation(g.n, seed + 100 + i))
        for k in range(1, min(k_max, 2) + 1):
            ladder.record(not distinguish(g, h, k).distinguished, f"{name} vs permuted, k={k}")
    checks.append(ladder)
    return checks


def report(checks: Iterable[Check], out: TextIO) -> bool:
    checks = list(checks)
    width = max(len(c.name) for c in checks)
    out.write(f"{'check':<{width}}  {'cases':>6}  {'failures':>8}  status\n")
    for c in checks:
        out.write(
            f"{c.name:<{width}}  {c.cases:>6}  {len(c.failures):>8}  {'PASS' if c.passed else 'FAIL'}\n"
        )
        for label in c.failures[:5]:
            out.write(f"  failed: {label}\n")
    ok = all(c.passed for c in checks)
    total = sum(c.cases for c in checks)
    out.write(f"{'PASS' if ok else 'FAIL'}: {len(checks)} checks, {total} cases\n")
    return ok
