"""Color refinement (1-dimensional Weisfeiler-Leman) with a smaller-parts work list."""

from __future__ import annotations

import numpy as np

from .graph import Graph
from .partition import (
    ClassRegistry,
    Coloring,
    RefinementTrace,
    RoundRecord,
    WorkList,
    radix_sort_rows,
    split_classes,
)


def refine1_stable(
    g: Graph, *, snapshots: bool = False, audit: bool = False
) -> tuple[Coloring, RefinementTrace]:
    """Coarsest stable coloring of ``g`` starting from one color.

    Each round drains the work list, records ``(v, c)`` for every neighbor
    ``v`` of a vertex in a drained class ``c``, radix-sorts the records by
    vertex, folds each vertex's run into the row
    ``(old color, 2r, c_1, count_1, ..., c_r, count_r, v)`` and radix-sorts
    those rows so that equal signatures sit next to each other inside each
    old class.  Vertices without a record form the residual part of their
    class.  The loop ends after the first round that splits nothing.

    With ``snapshots`` the trace keeps a copy of the coloring after every
    round; ``audit`` re-checks the registry after every round.
    """
    n = g.n
    colors = [0] * n
    trace = RefinementTrace(np.zeros(n, dtype=np.int64), snapshots=[] if snapshots else None)
    if n == 0:
        return Coloring(np.zeros(0, dtype=np.int64), 0), trace

    registry = ClassRegistry(colors, 1)
    worklist = WorkList([0])
    l_app = [0] * n
    adj = g.adj

    while len(worklist):
        drained = worklist.drain()
        records: list[tuple[int, int]] = []
        l_vertices = 0
        for c in drained:
            for w in registry.members(c):
                l_app[w] += 1
                l_vertices += 1
                for v in adj[w]:
                    records.append((v, c))

        bound = max(n, registry.num_colors) + 1
        records = radix_sort_rows(records, bound)

        rows: list[tuple[int, ...]] = []
        i = 0
        while i < len(records):
            v = records[i][0]
            sig: list[int] = []
            while i < len(records) and records[i][0] == v:
                c = records[i][1]
                run = 0
                while i < len(records) and records[i] == (v, c):
                    run += 1
                    i += 1
                sig.append(c)
                sig.append(run)
            rows.append((colors[v], len(sig), *sig, v))

        rows = radix_sort_rows(rows, max(bound, 2 * n + 1))
        elements = [r[-1] for r in rows]
        starts = [k == 0 or rows[k][:-1] != rows[k - 1][:-1] for k in range(len(rows))]
        splits = split_classes(colors, registry, elements, starts, worklist)

        trace.rounds.append(
            RoundRecord(
                drained=len(drained),
                l_elements=l_vertices,
                m_rows=len(records),
                m_length=2 * len(records),
                splits=splits,
            )
        )
        if snapshots:
            trace.snapshots.append(np.array(colors, dtype=np.int64))
        if audit:
            registry.audit(colors)

    trace.l_appearances = np.array(l_app, dtype=np.int64)
    return Coloring(np.array(colors, dtype=np.int64), registry.num_colors), trace
