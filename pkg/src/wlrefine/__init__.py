"""Weisfeiler-Leman color refinement: a work-list 1-WL engine, a k-WL engine
over dense tuple spaces, naive reference oracles and a distinguishing test."""

from .graph import Graph, GraphFormatError, disjoint_union, parse_dimacs, parse_edge_list, permute
from .isotest import DistinguishResult, Verdict, distinguish, escalate
from .estimator import ColorRefiner, refine
from .oracle import naive_stable_1, naive_stable_k
from .partition import Coloring, RefinementTrace, snapshot_partition
from .validation import SizeLimitError
from .wl1 import refine1_stable
from .wlk import TupleIndex, atomic_type, refinek_stable

__version__ = "0.1.0"

__all__ = [
    "ColorRefiner",
    "Coloring",
    "DistinguishResult",
    "Graph",
    "GraphFormatError",
    "RefinementTrace",
    "SizeLimitError",
    "TupleIndex",
    "Verdict",
    "atomic_type",
    "disjoint_union",
    "distinguish",
    "escalate",
    "naive_stable_1",
    "naive_stable_k",
    "parse_dimacs",
    "parse_edge_list",
    "permute",
    "refine",
    "refine1_stable",
    "refinek_stable",
    "snapshot_partition",
]
