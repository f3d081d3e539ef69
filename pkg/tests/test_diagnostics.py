from math import comb

import pytest

from conftest import random_coloring, random_graph
from monocore.constructions import lemma21_extremal
from monocore.diagnostics import check_lemma21, lemma22_check, partition_rbc
from monocore.graph import ColoredGraph, Graph, color_class, d_core


def test_lemma21_extremal_graph_is_at_threshold():
    g = lemma21_extremal(10, 3).colored.graph
    rep = check_lemma21(g, 3)
    assert rep.edge_threshold == 17
    assert (rep.exceeds, rep.core_nonempty, rep.consistent) == (False, False, True)


def test_lemma21_k4():
    rep = check_lemma21(Graph.complete(4), 3)
    assert rep.exceeds and rep.core_nonempty and rep.consistent


def test_lemma21_inapplicable_when_n_below_k():
    rep = check_lemma21(Graph.complete(2), 3)
    assert not rep.applicable and rep.consistent


def test_lemma21_sweep(rng):
    for _ in range(500):
        n = rng.randint(1, 12)
        g = random_graph(rng, n, rng.random())
        for k in (1, 2, 3, 4):
            assert check_lemma21(g, k).consistent


def test_lemma22_pendant_inapplicable():
    g = Graph(6, list(Graph.complete(5).edges) + [(4, 5)])
    rep = lemma22_check(g, 3)
    assert rep.X == {5} and not rep.applicable and rep.holds


def test_lemma22_on_path():
    g = lemma21_extremal(8, 2).colored.graph
    rep = lemma22_check(g, 2)
    assert len(rep.X) == 8 and rep.degree_sum == 14 and rep.bound == 15 and rep.holds


def test_lemma22_sweep(rng):
    applicable = 0
    for _ in range(500):
        g = random_graph(rng, rng.randint(2, 12), rng.random() * 0.7)
        for k in (2, 3, 4):
            rep = lemma22_check(g, k)
            applicable += rep.applicable
            assert rep.holds
    assert applicable > 500


def test_partition_disjoint_cliques():
    a = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    b = [(u + 4, v + 4) for u, v in a]
    p = partition_rbc(ColoredGraph.from_classes(8, [a, b]), 2)
    # B misses the blue core but sits in the red one
    assert p.B == {0, 1, 2, 3} and p.R == {4, 5, 6, 7} and p.C == frozenset()


def test_partition_forests():
    red = [(0, 1), (1, 2), (2, 3)]
    blue = [(0, 2), (1, 3), (0, 3)]
    cg = ColoredGraph.from_classes(4, [red, blue])
    p = partition_rbc(cg, 2)
    assert p.C == {0, 1, 2, 3}
    blue_g = color_class(cg, 1)
    assert p.b_of == {v: blue_g.degree(v) for v in range(4)}
    assert p.b_c == 2 * len(blue)


def test_partition_requires_two_colors():
    g = Graph.complete(3)
    with pytest.raises(ValueError):
        partition_rbc(ColoredGraph(g, 3, {e: 0 for e in g.edges}), 2)


def test_partition_b_of_counts_only_edges_outside_blue_core():
    # blue triangle 0-1-2 plus pendant blue edge 2-3; red edge 3-4
    cg = ColoredGraph.from_classes(5, [[(3, 4)], [(0, 1), (1, 2), (0, 2), (2, 3)]])
    p = partition_rbc(cg, 2)
    assert p.R == {0, 1, 2} and p.B == frozenset() and p.C == {3, 4}
    assert p.b_of == {3: 1, 4: 0}
    assert p.r_of == {0: 0, 1: 0, 2: 0, 3: 1, 4: 1}


def test_partition_inequality_on_k7(rng):
    g = Graph.complete(7)
    for _ in range(300):
        cg = random_coloring(rng, g, 2)
        p = partition_rbc(cg, 2)
        assert p.inequality_holds
        red, blue = (d_core(color_class(cg, c), 2) for c in range(2))
        assert p.R | p.B | p.C == frozenset(range(7)) - (red & blue)
        assert not (p.R & p.B) and not (p.R & p.C) and not (p.B & p.C)


def test_partition_sums_match_definition(rng):
    d = 3
    for _ in range(50):
        g = random_graph(rng, 12, 0.6)
        cg = random_coloring(rng, g, 2)
        p = partition_rbc(cg, d)
        assert p.blue_bound == 2 * (d - 1) * (len(p.B) + len(p.C)) - comb(d, 2)
        assert p.b_c == sum(p.b_of[v] for v in p.C)
