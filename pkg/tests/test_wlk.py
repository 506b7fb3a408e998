import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import graphs
from wlrefine import generators as gen
from wlrefine.corpus import gnp_corpus, structured
from wlrefine.graph import Graph, disjoint_union, permute
from wlrefine.oracle import naive_round_k, naive_stable_k
from wlrefine.partition import refines, snapshot_partition
from wlrefine.validation import SizeLimitError
from wlrefine.wl1 import refine1_stable
from wlrefine.wlk import (
    PairRelation,
    TupleIndex,
    atomic_coloring,
    atomic_type,
    refinek_stable,
)

EQ, ADJ, NO = PairRelation.EQUAL, PairRelation.ADJACENT, PairRelation.NEITHER


def test_tuple_index_examples():
    idx = TupleIndex(6, 2)
    assert idx.encode((0, 0)) == 0
    assert idx.substitute(idx.encode((2, 5)), 1, 4) == idx.encode((4, 5))
    for i in range(idx.size):
        for j in (1, 2):
            assert idx.substitute(i, j, idx.decode(i)[j - 1]) == i


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 7), st.integers(1, 4), st.data())
def test_tuple_index_substitute_matches_decode_edit_encode(n, k, data):
    idx = TupleIndex(n, k)
    t = data.draw(st.tuples(*[st.integers(0, n - 1)] * k))
    j = data.draw(st.integers(1, k))
    y = data.draw(st.integers(0, n - 1))
    assert idx.decode(idx.encode(t)) == t
    edited = list(t)
    edited[j - 1] = y
    assert idx.substitute(idx.encode(t), j, y) == idx.encode(edited)


@pytest.mark.parametrize(
    "call",
    [
        lambda idx: idx.encode((0, 6)),
        lambda idx: idx.encode((0,)),
        lambda idx: idx.decode(36),
        lambda idx: idx.substitute(0, 3, 1),
        lambda idx: idx.substitute(0, 0, 1),
        lambda idx: idx.substitute(0, 1, 6),
    ],
)
def test_tuple_index_errors(call):
    with pytest.raises(ValueError):
        call(TupleIndex(6, 2))


def test_atomic_type_examples():
    g = gen.complete(3)
    assert atomic_type(g, (1, 1)) == (EQ,)
    assert atomic_type(g, (0, 2)) == (ADJ,)
    assert atomic_type(g, (0, 1, 2)) == (ADJ, ADJ, ADJ)
    assert atomic_type(gen.path(3), (0, 2, 0)) == (NO, EQ, NO)
    assert atomic_type(g, (0,)) == ()


def test_atomic_coloring_matches_atomic_type():
    g = gen.gnp(5, 0.5, 9)
    idx = TupleIndex(5, 3)
    colors = atomic_coloring(g, 3)
    types = [atomic_type(g, idx.decode(i)) for i in range(idx.size)]
    assert snapshot_partition(colors) == snapshot_partition(
        [sorted(set(types)).index(t) for t in types]
    )


@pytest.mark.parametrize("rule", ["columns", "recompute"])
def test_k3_graph_two_classes(rule):
    coloring, trace = refinek_stable(gen.complete(3), 2, rule)
    assert coloring.partition() == ((0, 4, 8), (1, 2, 3, 5, 6, 7))
    assert trace.splitting_rounds == 0


@pytest.mark.parametrize("rule", ["columns", "recompute"])
def test_k1_engine_matches_vertex_engine(hex_chord, rule):
    coloring, _ = refinek_stable(hex_chord, 1, rule)
    assert coloring.partition() == ((0,), (1, 5), (2, 4), (3,))
    for g in gnp_corpus(60, 12, seed=11):
        assert refinek_stable(g, 1, rule)[0].partition() == refine1_stable(g)[0].partition()


@pytest.mark.parametrize("rule", ["columns", "recompute"])
def test_c6_vs_two_triangles_at_k2(rule):
    g = disjoint_union(gen.cycle(6), gen.disjoint_cycles([3, 3]))
    coloring, _ = refinek_stable(g, 2, rule)
    idx = TupleIndex(12, 2)
    inside_c6 = [idx.encode((a, b)) for a in range(6) for b in range(6)]
    inside_c3 = [idx.encode((a, b)) for a in range(6, 12) for b in range(6, 12)]
    colors = coloring.color_of
    assert sorted(colors[inside_c6]) != sorted(colors[inside_c3])
    expected, _ = naive_stable_k(g, 2)
    assert coloring.partition() == snapshot_partition(expected)


def _check_run(g, k, rule):
    coloring, trace = refinek_stable(g, k, rule, snapshots=True, audit=True)
    expected, history = naive_stable_k(g, k)
    assert coloring.partition() == snapshot_partition(expected)
    assert trace.rounds_executed == len(history)
    prev = atomic_coloring(g, k)
    for snap in trace.snapshots:
        assert refines(snap, prev)
        prev = snap
    again = naive_round_k(g, k, coloring.color_of.tolist())
    assert len(set(again)) == coloring.num_colors
    assert trace.max_l_appearances <= 1 + k * math.floor(math.log2(g.n))
    for r in trace.rounds:
        if rule == "columns":
            assert r.m_rows == k * g.n * r.l_elements
        for s in r.splits:
            assert all(size <= s.retained_size for _, size in s.fresh)


@pytest.mark.parametrize("rule", ["columns", "recompute"])
@pytest.mark.parametrize("k", [2, 3])
def test_structured_graphs_match_oracle(rule, k):
    for name, g in structured(max_n=16 if k == 2 else 9):
        _check_run(g, k, rule)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=7), st.sampled_from(["columns", "recompute"]))
def test_k2_matches_oracle(g, rule):
    _check_run(g, 2, rule)


@settings(max_examples=25, deadline=None)
@given(graphs(min_n=1, max_n=5), st.sampled_from(["columns", "recompute"]))
def test_k3_matches_oracle(g, rule):
    _check_run(g, 3, rule)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=6), st.randoms(use_true_random=False))
def test_k2_equivariance(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    idx = TupleIndex(g.n, 2)
    base = refinek_stable(g, 2)[0].partition()
    moved = refinek_stable(permute(g, perm), 2)[0].partition()

    def image(t):
        a, b = idx.decode(t)
        return idx.encode((perm[a], perm[b]))

    assert sorted(moved) == sorted(tuple(sorted(image(t) for t in cls)) for cls in base)


def test_empty_graph():
    coloring, trace = refinek_stable(Graph(0, ()), 2)
    assert coloring.element_count == 0 and trace.rounds_executed == 0


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        refinek_stable(gen.path(3), 0)
    with pytest.raises(ValueError):
        refinek_stable(gen.path(3), 2, "literal")
    with pytest.raises(SizeLimitError):
        refinek_stable(Graph.from_edges(1 << 11, []), 4)


def test_l_elements_counted_per_round():
    coloring, trace = refinek_stable(gen.cycle(5), 2)
    assert int(np.sum(trace.l_appearances)) == sum(r.l_elements for r in trace.rounds)
