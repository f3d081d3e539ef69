import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_coloring, random_graph
from oracles import max_d_subgraph_sets, max_mono_order
from monocore.constructions import construct_H
from monocore.graph import (ColoredGraph, Graph, color_class, core_numbers, d_core,
                            max_mono_d_subgraph)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


def test_graph_rejects_loops_and_duplicates():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


def test_adjacency_symmetric():
    g = Graph(4, [(0, 1), (2, 1), (3, 0)])
    assert g.m == 3
    for u in range(4):
        for v in g.adj[u]:
            assert u in g.adj[v]


def test_coloring_must_be_total_and_in_range():
    g = Graph.complete(3)
    with pytest.raises(ValueError):
        ColoredGraph(g, 2, {(0, 1): 0, (0, 2): 1})
    with pytest.raises(ValueError):
        ColoredGraph(g, 2, {(0, 1): 0, (0, 2): 1, (1, 2): 2})


def test_d_core_examples():
    assert d_core(Graph.complete(4), 3) == {0, 1, 2, 3}
    assert d_core(Graph.path(5), 2) == frozenset()
    h = construct_H(8, 2).colored.graph
    assert d_core(h, 2) == {0, 1, 2}
    assert d_core(Graph(0), 1) == frozenset()
    with pytest.raises(ValueError):
        d_core(Graph.complete(3), 0)


def test_color_class_examples():
    g = Graph.complete(3)
    cg = ColoredGraph(g, 2, {e: 0 for e in g.edges})
    assert color_class(cg, 0) == g
    assert color_class(cg, 1) == Graph(3)
    with pytest.raises(ValueError):
        color_class(cg, 2)


def test_color_classes_partition_edges(rng):
    for _ in range(20):
        g = random_graph(rng, 9, 0.5)
        cg = random_coloring(rng, g, 3)
        union = set()
        for c in range(3):
            es = color_class(cg, c).edges
            assert not (union & es)
            union |= es
        assert union == g.edges


def test_max_mono_examples():
    g = Graph.complete(3)
    rep = max_mono_d_subgraph(ColoredGraph(g, 2, {e: 0 for e in g.edges}), 2)
    assert (rep.best_color, rep.best_order) == (0, 3)
    empty = max_mono_d_subgraph(ColoredGraph(Graph.path(4), 2, {(0, 1): 0, (1, 2): 1, (2, 3): 0}), 2)
    assert (empty.best_color, empty.best_order) == (0, 0)


def test_max_mono_tie_breaks_low_color():
    cg = ColoredGraph.from_classes(6, [[(3, 4), (4, 5), (3, 5)], [(0, 1), (1, 2), (0, 2)]])
    rep = max_mono_d_subgraph(cg, 2)
    assert rep.best_color == 0 and rep.best_order == 3


def test_max_mono_matches_subset_oracle(rng):
    for _ in range(15):
        g = random_graph(rng, 10, 0.5)
        cg = random_coloring(rng, g, 2)
        for d in (1, 2, 3):
            expected = max_mono_order(10, list(cg.color.items()), 2, d)
            assert max_mono_d_subgraph(cg, d).best_order == expected


@settings(max_examples=150, deadline=None)
@given(graphs(), st.integers(1, 4))
def test_core_is_unique_maximum(g, d):
    core = d_core(g, d)
    sets = max_d_subgraph_sets(g.n, g.edges, d)
    if not core:
        assert sets == []
    else:
        assert sets == [set(core)]


@settings(max_examples=150, deadline=None)
@given(graphs(), st.integers(1, 4))
def test_core_fixed_point(g, d):
    core = d_core(g, d)
    for v in core:
        assert sum(1 for w in g.adj[v] if w in core) >= d
    for v in set(range(g.n)) - core:
        assert d_core(g.induced(core | {v}), d) == core


@settings(max_examples=100, deadline=None)
@given(graphs(), st.integers(1, 3), st.data())
def test_adding_an_edge_never_shrinks_core(g, d, data):
    missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if (u, v) not in g.edges]
    if not missing:
        return
    e = data.draw(st.sampled_from(missing))
    assert d_core(g, d) <= d_core(g.with_edges([e]), d)


@settings(max_examples=100, deadline=None)
@given(graphs(), st.integers(1, 3), st.randoms(use_true_random=False))
def test_peeling_order_independent(g, d, rnd):
    alive = set(range(g.n))
    while True:
        low = [v for v in alive if sum(1 for w in g.adj[v] if w in alive) < d]
        if not low:
            break
        alive.discard(rnd.choice(low))
    assert alive == d_core(g, d)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=12))
def test_core_numbers_match_networkx(g):
    ng = nx.Graph()
    ng.add_nodes_from(range(g.n))
    ng.add_edges_from(g.edges)
    ref = nx.core_number(ng)
    assert core_numbers(g) == [ref[v] for v in range(g.n)]
    for d in range(1, 5):
        assert d_core(g, d) == {v for v in range(g.n) if ref[v] >= d}


def test_union_of_d_subgraphs_is_d_subgraph():
    rng = random.Random(5)
    for _ in range(50):
        g = random_graph(rng, 10, 0.6)
        d = 2
        core = d_core(g, d)
        # two different d-subgraphs inside the core union to a d-subgraph
        parts = [d_core(g.induced(core - {v}), d) for v in list(core)[:2]]
        union = set().union(*parts) if parts else set()
        for v in union:
            assert sum(1 for w in g.adj[v] if w in union) >= d
        assert union <= core
