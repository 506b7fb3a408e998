"""scikit-learn style front end.

:class:`ColorRefiner` treats refinement as clustering of the graph's
elements (vertices for ``k == 1`` with the work-list engine, k-tuples
otherwise): ``fit`` computes the stable coloring and ``labels_`` holds one
color per element, so it plugs into ``get_params``/``set_params``,
``clone`` and grid searches like any other estimator.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.utils.validation import check_is_fitted

from .oracle import naive_stable_1, naive_stable_k
from .partition import snapshot_partition
from .validation import check_algorithm, check_dimension, check_graph, check_rule, check_tuple_space
from .wl1 import refine1_stable
from .wlk import TupleIndex, refinek_stable


def refine(g, k: int = 1, rule: str = "columns", algorithm: str = "worklist"):
    """Return ``(colors, rounds, trace)`` for the stable coloring of ``g``.

    ``trace`` is ``None`` for the naive algorithm.  ``k == 1`` with the
    work-list algorithm uses the dedicated vertex engine.
    """
    check_graph(g)
    check_dimension(k)
    check_rule(rule)
    check_algorithm(algorithm)
    check_tuple_space(g.n, k)
    if algorithm == "naive":
        colors, history = naive_stable_1(g) if k == 1 else naive_stable_k(g, k)
        return np.asarray(colors, dtype=np.int64), len(history), None
    if k == 1:
        coloring, trace = refine1_stable(g)
    else:
        coloring, trace = refinek_stable(g, k, rule)
    return coloring.color_of, trace.rounds_executed, trace


class ColorRefiner(ClusterMixin, BaseEstimator):
    """Stable Weisfeiler-Leman coloring of a single graph.

    Parameters
    ----------
    k : int
        Dimension; elements are vertices for ``k == 1`` and k-tuples otherwise.
    rule : {"columns", "recompute"}
        Update rule of the k-tuple engine.
    algorithm : {"worklist", "naive"}
        Optimized engine or the reference fixpoint iteration.

    Attributes
    ----------
    labels_ : ndarray of shape (n**k,)
        Color id per element, tuples in lexicographic order.
    n_classes_ : int
    n_rounds_ : int
        Rounds run, including the final one that changed nothing.
    partition_ : tuple of tuples
        Classes of element indices ordered by smallest member.
    trace_ : RefinementTrace or None
    """

    def __init__(self, k: int = 1, rule: str = "columns", algorithm: str = "worklist"):
        self.k = k
        self.rule = rule
        self.algorithm = algorithm

    def fit(self, X, y=None):
        labels, rounds, trace = refine(X, self.k, self.rule, self.algorithm)
        self.labels_ = labels
        self.n_classes_ = int(len(np.unique(labels)))
        self.n_rounds_ = rounds
        self.trace_ = trace
        self.partition_ = snapshot_partition(labels)
        self.n_vertices_ = X.n
        return self

    def tuple_partition(self) -> list[list[tuple[int, ...]]]:
        """``partition_`` with element indices decoded to vertex tuples."""
        check_is_fitted(self, "labels_")
        index = TupleIndex(self.n_vertices_, self.k)
        return [[index.decode(i) for i in cls] for cls in self.partition_]
