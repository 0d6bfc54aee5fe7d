import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from spanenum.baselines import BLACKBOXES, brute_force_mst_weight, check_spanning_tree, kruskal
from spanenum.graph import EdgeRef, Graph, GraphError, graph_from_edges
from spanenum.mst_enum import (
    ConsistencyError,
    OriginArray,
    boruvka_round,
    degree_sort_relabeling,
    enumerate_mst,
    enumerate_mst_degree_sorted,
    preselected_comparator,
    relabeling_from_degrees,
)
from spanenum.stream import CollectingSink

from conftest import connected_graphs

VARIANTS = [enumerate_mst, enumerate_mst_degree_sorted]


def test_boruvka_round_triangle(triangle_w):
    f = boruvka_round(triangle_w)
    assert f.selected == [EdgeRef(0, 1), EdgeRef(1, 2)]
    assert f.min_weight == 1
    assert f.contains(1, 0) and not f.contains(0, 2)


def test_boruvka_round_square_merges_pairs():
    g = graph_from_edges(4, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 0, 2)], weighted=True)
    f = boruvka_round(g)
    assert f.selected == [EdgeRef(0, 1), EdgeRef(2, 3)]


def test_boruvka_round_tie_goes_to_smaller_neighbor():
    g = graph_from_edges(3, [(0, 2, 4), (0, 1, 4), (1, 2, 9)], weighted=True)
    assert boruvka_round(g).selected[0] == EdgeRef(0, 1)


def test_relabeling_example():
    r = relabeling_from_degrees([3, 1, 2])
    assert r.old_id == [1, 2, 0]
    assert r.new_id == [2, 0, 1]


def test_relabeling_bucket_path_matches_numpy_path():
    degrees = [(7 * i) % 13 for i in range(70000)]
    big = relabeling_from_degrees(degrees)
    assert [degrees[v] for v in big.old_id] == sorted(degrees)
    assert all(big.new_id[v] == i for i, v in enumerate(big.old_id))
    small = relabeling_from_degrees(degrees[:500])
    assert small.old_id == sorted(range(500), key=lambda v: degrees[v])


@settings(max_examples=100, deadline=None)
@given(connected_graphs(max_n=20))
def test_degree_order_prefix_mean_is_at_most_average(g):
    r = degree_sort_relabeling(g)
    degs = [g.degree(v) for v in r.old_id]
    avg = Fraction(sum(degs), g.n)
    running = 0
    for x, d in enumerate(degs, start=1):
        running += d
        assert Fraction(running, x) <= avg


@settings(max_examples=150, deadline=None)
@given(connected_graphs(min_n=2, max_n=16, weight_max=4))
def test_round_forest_is_large_and_inside_some_mst(g):
    for rel in (None, degree_sort_relabeling(g)):
        f = boruvka_round(g, relabeling=rel)
        assert math.ceil(g.n / 2) <= len(f) <= g.n - 1
        assert len(set(f.selected)) == len(f.selected)
        sink = CollectingSink()
        info = (enumerate_mst if rel is None else enumerate_mst_degree_sorted)(g, "prim", sink)
        assert set(f.selected) <= set(sink.edges)
        assert sink.edges[: len(f)] == f.selected
        assert info.forest.selected == f.selected


@settings(max_examples=150, deadline=None)
@given(connected_graphs(min_n=1, max_n=7, weight_max=4))
def test_enumeration_weight_matches_brute_force(g):
    best = brute_force_mst_weight(g)
    for variant in VARIANTS:
        for name in BLACKBOXES:
            sink = CollectingSink()
            variant(g, name, sink, validate=True)
            report = check_spanning_tree(g, sink.edges)
            assert report, report.reason
            assert report.total_weight == best


@settings(max_examples=60, deadline=None)
@given(connected_graphs(min_n=2, max_n=20, weight_max=10**6))
def test_edge_sets_equal_kruskal_with_distinct_weights(g):
    ws = sorted(e.weight for e in g.edges())
    if len(set(ws)) != len(ws):
        return
    ref = sorted(kruskal(g))
    for variant in VARIANTS:
        for name in BLACKBOXES:
            sink = CollectingSink()
            variant(g, name, sink)
            assert sorted(EdgeRef.undirected(e.u, e.v, g.edge_weight(e.u, e.v)) for e in sink.edges) == ref


def test_comparator_ranks_preselected_first(triangle_w):
    f = boruvka_round(triangle_w)
    order = preselected_comparator(triangle_w, f)
    assert order.compare((1, 2, 2), (0, 2, 3)) == -1
    # forest edge {1, 2} beats a lighter ordinary edge once ranked
    heavy = OriginArray([None, None, 1], [EdgeRef(1, 2)])
    order = preselected_comparator(triangle_w, heavy)
    assert order.compare((2, 1, 2), (0, 1, 1)) == -1
    assert order.compare((0, 1, 1), (0, 1, 1)) == 0
    with pytest.raises(GraphError):
        preselected_comparator(Graph(2, weighted=True), heavy)


def test_blackbox_that_drops_a_forest_edge_is_caught(triangle_w):
    def liar(g, key):
        return [None, 2, 0]

    with pytest.raises(ConsistencyError, match="missing"):
        enumerate_mst(triangle_w, liar, CollectingSink())


def test_blackbox_returning_non_tree_is_caught(triangle_w):
    with pytest.raises(ConsistencyError):
        enumerate_mst(triangle_w, lambda g, key: [None, None, 0], CollectingSink())


def test_degree_sorted_keeps_original_ids():
    # star centre 0 with leaves; leaves have degree 1 and are processed first
    g = graph_from_edges(4, [(0, 1, 5), (0, 2, 6), (0, 3, 7)], weighted=True)
    sink = CollectingSink()
    info = enumerate_mst_degree_sorted(g, "kruskal", sink)
    assert sink.edges == [EdgeRef(0, 1), EdgeRef(0, 2), EdgeRef(0, 3)]
    assert info.relabeling.old_id == [1, 2, 3, 0]


def test_single_vertex_and_bad_input():
    sink = CollectingSink()
    enumerate_mst(Graph(1, weighted=True), "prim", sink)
    assert sink.edges == []
    with pytest.raises(GraphError):
        enumerate_mst(graph_from_edges(2, [(0, 1)]), "prim", sink)
