from wlrefine import generators as gen
from wlrefine.corpus import gnp_corpus
from wlrefine.oracle import (
    naive_atomic,
    naive_round_1,
    naive_round_k,
    naive_stable_1,
    naive_stable_k,
)
from wlrefine.partition import refines, snapshot_partition
from wlrefine.wlk import refinek_stable


def test_round_1_cycle_is_fixed():
    assert naive_round_1(gen.cycle(6), [0] * 6) == [0] * 6


def test_round_1_hex_chord_degree_partition(hex_chord):
    once = naive_round_1(hex_chord, [0] * 6)
    assert snapshot_partition(once) == ((0, 2, 3, 4), (1, 5))


def test_round_1_fixpoint_on_stable_input(hex_chord):
    stable, _ = naive_stable_1(hex_chord)
    assert snapshot_partition(naive_round_1(hex_chord, stable)) == snapshot_partition(stable)


def test_round_k_k3_is_already_stable():
    g = gen.complete(3)
    start = naive_atomic(g, 2)
    assert snapshot_partition(naive_round_k(g, 2, start)) == snapshot_partition(start)


def test_round_k_with_k1_twice_gives_paper_round_two(hex_chord):
    colors = naive_round_k(hex_chord, 1, naive_round_k(hex_chord, 1, [0] * 6))
    assert snapshot_partition(colors) == ((0,), (1, 5), (2, 4), (3,))


def test_hex_chord_fixpoint_round_count(hex_chord):
    final, history = naive_stable_1(hex_chord)
    assert len(history) == 3
    assert snapshot_partition(history[-1]) == snapshot_partition(history[-2])


def test_gnp_k2_fixpoint_equals_recompute_engine():
    g = gen.gnp(8, 0.5, 1)
    expected, _ = naive_stable_k(g, 2)
    coloring, _ = refinek_stable(g, 2, "recompute")
    assert coloring.partition() == snapshot_partition(expected)


def test_history_refines_and_is_bounded():
    for g in gnp_corpus(30, 7, seed=50):
        for k in (1, 2):
            final, history = (naive_stable_1(g) if k == 1 else naive_stable_k(g, k))
            assert len(history) <= max(1, g.n**k)
            prev = [0] * g.n if k == 1 else naive_atomic(g, k)
            for colors in history:
                assert refines(colors, prev)
                prev = colors


def test_stable_1_equals_stable_k_with_k1():
    for g in gnp_corpus(40, 9, seed=3):
        assert snapshot_partition(naive_stable_1(g)[0]) == snapshot_partition(naive_stable_k(g, 1)[0])
