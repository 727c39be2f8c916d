# tests/test_width.py

from __future__ import annotations

from hypothesis import given, settings

from src.core.model import TemporalGraph
from src.width.bags import (
    edge_bag_sequence,
    imw,
    max_active_edges,
    naive_edge_bags,
    naive_vertex_bags,
    start_bag_time,
    vertex_bag_sequence,
    vimw,
)
from tests.strategies import temporal_graphs


def test_star_edge_bags(four_leaf_star):
    seq = edge_bag_sequence(four_leaf_star.graph)
    assert seq.bags[0] == seq.bags[1] == (0,)
    assert seq.bags[2] == (0, 1)
    assert seq.bags[3] == seq.bags[4] == (0, 1, 2)
    assert seq.bags[5] == (0, 2)
    assert seq.bags[6:] == [(0, 3)] * 3
    assert seq.sizes_changes() == [(1, 1), (3, 2), (4, 3), (6, 2)]


def test_star_widths(four_leaf_star):
    assert imw(four_leaf_star.graph) == 3
    assert vimw(four_leaf_star.graph) == 4


def test_single_bag_lookup_matches_materialized(four_leaf_star):
    seq = edge_bag_sequence(four_leaf_star.graph)
    lazy = [seq.bag(t) for t in range(1, 10)]
    assert lazy == seq.bags
    assert seq.bag(0) == () and seq.bag(10) == ()


def test_edgeless_graph_has_zero_width():
    g = TemporalGraph.build(4, [])
    assert imw(g) == 0
    assert vimw(g) == 0
    assert edge_bag_sequence(g).bags == []
    assert start_bag_time(g) is None


def test_isolated_vertex_is_in_no_bag():
    g = TemporalGraph.build(3, [(0, 1, [2, 5])])
    seq = vertex_bag_sequence(g)
    assert seq.intervals[2] is None
    assert all(2 not in bag for bag in seq.bags)


def test_insertions_equal_total_bag_size():
    g = TemporalGraph.build(4, [(0, 1, [1, 4]), (1, 2, [2, 3]), (2, 3, [3, 6])])
    seq = edge_bag_sequence(g)
    assert seq.insertions == 0
    total = sum(len(b) for b in seq.bags)
    assert seq.insertions == total == 4 + 2 + 4


def test_start_bag_time_and_active_edges():
    g = TemporalGraph.build(4, [(0, 1, [1, 4]), (1, 2, [2, 3]), (2, 3, [3, 6])])
    assert start_bag_time(g) == 3
    assert max_active_edges(g) == 2


@settings(max_examples=150, deadline=None)
@given(temporal_graphs(max_n=6, max_m=8, max_time=10, max_times=4))
def test_bags_match_direct_definition(g):
    assert edge_bag_sequence(g).bags == naive_edge_bags(g)
    assert vertex_bag_sequence(g).bags == naive_vertex_bags(g)


@settings(max_examples=150, deadline=None)
@given(temporal_graphs(max_n=6, max_m=8, max_time=10, max_times=4))
def test_width_is_largest_bag(g):
    edge_seq = edge_bag_sequence(g)
    vertex_seq = vertex_bag_sequence(g)
    assert edge_seq.width == max((len(b) for b in naive_edge_bags(g)), default=0)
    assert vertex_seq.width == max((len(b) for b in naive_vertex_bags(g)), default=0)
    assert max_active_edges(g) <= edge_seq.width


@settings(max_examples=100, deadline=None)
@given(temporal_graphs(max_n=6, max_m=8, max_time=10, max_times=4))
def test_edge_bag_endpoints_lie_in_vertex_bags(g):
    edge_bags = naive_edge_bags(g)
    vertex_bags = naive_vertex_bags(g)
    for t, bag in enumerate(edge_bags):
        for i in bag:
            e = g.edges[i]
            assert e.u in vertex_bags[t] and e.v in vertex_bags[t]


@settings(max_examples=100, deadline=None)
@given(temporal_graphs(max_n=6, max_m=8, max_time=10, max_times=4))
def test_sizes_changes_reconstruct_bag_sizes(g):
    seq = edge_bag_sequence(g)
    sizes = [len(b) for b in seq.bags]
    changes = dict(seq.sizes_changes())
    current = 0
    for t in range(1, seq.lifetime + 1):
        current = changes.get(t, current)
        assert current == sizes[t - 1]
