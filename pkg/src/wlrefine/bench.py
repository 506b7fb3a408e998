"""Timing sweeps for ``wlrefine bench``."""

from __future__ import annotations

import csv
import time
from typing import Iterable, Sequence, TextIO

import numpy as np

from . import generators as gen
from .graph import Graph
from .wl1 import refine1_stable
from .wlk import refinek_stable

COLUMNS = ("family", "n", "k", "rule", "rounds", "seconds", "m_rows_total", "max_l_appearances")
FIXED_FAMILIES = {"rook4x4": gen.rook4x4, "shrikhande": gen.shrikhande}


def bench_graph(family: str, n: int, seed: int, avg_degree: float) -> Graph:
    if family in FIXED_FAMILIES:
        return FIXED_FAMILIES[family]()
    if family == "gnp":
        return gen.gnp(n, min(1.0, avg_degree / n) if n else 0.0, seed)
    if family in ("cycle", "path", "complete"):
        return gen.generate(family, n=n)
    raise ValueError(f"family {family!r} is not benchmarkable")


def run_bench(
    k: int,
    family: str,
    sizes: Sequence[int],
    reps: int = 1,
    seed: int = 0,
    rule: str = "columns",
    avg_degree: float = 8.0,
) -> list[dict]:
    """One row per (size, repetition); ``k == 1`` times the vertex engine."""
    rows = []
    for n in sizes:
        g = bench_graph(family, n, seed, avg_degree)
        for _ in range(reps):
            start = time.perf_counter()
            if k == 1:
                _, trace = refine1_stable(g)
            else:
                _, trace = refinek_stable(g, k, rule)
            elapsed = time.perf_counter() - start
            rows.append(
                {
                    "family": family,
                    "n": g.n,
                    "k": k,
                    "rule": "n/a" if k == 1 else rule,
                    "rounds": trace.rounds_executed,
                    "seconds": f"{elapsed:.6f}",
                    "m_rows_total": trace.m_rows_total,
                    "max_l_appearances": trace.max_l_appearances,
                }
            )
    return rows


def write_csv(rows: Iterable[dict], out: TextIO) -> None:
    writer = csv.DictWriter(out, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)


def loglog_slope(rows: Iterable[dict]) -> float:
    """Least-squares slope of log(median seconds) against log(n)."""
    by_n: dict[int, list[float]] = {}
    for r in rows:
        by_n.setdefault(int(r["n"]), []).append(float(r["seconds"]))
    ns = sorted(by_n)
    if len(ns) < 2:
        raise ValueError("slope needs at least two sizes")
    xs = np.log([float(n) for n in ns])
    ys = np.log([float(np.median(by_n[n])) for n in ns])
    return float(np.polyfit(xs, ys, 1)[0])
