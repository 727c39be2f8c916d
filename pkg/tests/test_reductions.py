# tests/test_reductions.py

from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from src.core.errors import ReductionError, ResourceGuardError
from src.core.model import StarInstance, TimeEdge, Visit
from src.core.verify import verify_euler_circuit, verify_star_exploration
from src.euler.dp import solve_temp_euler
from src.euler.oracle import brute_force_temp_euler
from src.reach.mrd import brute_force_mrd, solve_mrd
from src.reach.reachability import verify_deletion_set
from src.reductions.clique import has_clique, reduce_clique_to_mrd
from src.reductions.coloring import is_three_colorable, reduce_3col_to_starexp
from src.reductions.doublestar import reduce_starexp_to_doublestar
from src.star.solver import brute_force_star_exp, solve_star_exp
from tests.strategies import stars

# ---------------------------------------------------------------------------
# 3-coloring -> star exploration
# ---------------------------------------------------------------------------


def test_coloring_star_shape():
    s, cert = reduce_3col_to_starexp(nx.complete_graph(3))
    assert s.k == 4
    assert s.m == 3 + 3 * 3
    assert s.graph.labels[0] == "c"
    assert s.graph.labels[1] == "v0"
    assert s.graph.labels[4] == "e0_1_0"
    assert cert.spacing == 13


def test_vertex_windows_are_disjoint():
    for n in range(1, 7):
        s, cert = reduce_3col_to_starexp(nx.path_graph(n))
        for i in range(1, n):
            assert cert.time(i, 2) + 2 * n < cert.time(i, 3) < cert.time(i + 1, 0)
        assert all(t > 0 for e in s.graph.edges for t in e.times)


@pytest.mark.parametrize("graph", [nx.complete_graph(3), nx.cycle_graph(5), nx.path_graph(4), nx.petersen_graph()])
def test_proper_coloring_gives_an_exploration(graph):
    s, cert = reduce_3col_to_starexp(graph)
    coloring = is_three_colorable(graph)
    assert coloring is not None
    visits = cert.coloring_to_visits(coloring)
    assert verify_star_exploration(s, visits)
    assert cert.visits_to_coloring(visits) == coloring


def test_improper_coloring_is_rejected():
    graph = nx.complete_graph(3)
    _, cert = reduce_3col_to_starexp(graph)
    with pytest.raises(ReductionError):
        cert.coloring_to_visits({0: 0, 1: 0, 2: 1})


def test_coloring_oracle():
    assert is_three_colorable(nx.complete_graph(4)) is None
    assert is_three_colorable(nx.Graph()) == {}
    with pytest.raises(ResourceGuardError):
        is_three_colorable(nx.path_graph(5), max_vertices=4)


def test_self_loop_is_rejected():
    graph = nx.Graph()
    graph.add_edge(0, 0)
    with pytest.raises(ReductionError):
        reduce_3col_to_starexp(graph)


def _non_three_colorable_graphs() -> list[nx.Graph]:
    small = [g for g in nx.graph_atlas_g() if 0 < g.number_of_nodes() <= 5]
    return [g for g in small if is_three_colorable(g) is None] + [nx.wheel_graph(6)]


def test_complete_graph_on_four_vertices_has_no_exploration():
    s, _ = reduce_3col_to_starexp(nx.complete_graph(4))
    assert not solve_star_exp(s).explorable


@pytest.mark.slow
@pytest.mark.parametrize("graph", [nx.empty_graph(2), nx.path_graph(2), nx.path_graph(3), nx.cycle_graph(5)])
def test_coloring_star_decided_by_dp(graph):
    s, cert = reduce_3col_to_starexp(graph)
    res = solve_star_exp(s)
    assert res.explorable == (is_three_colorable(graph) is not None)
    if res.explorable:
        coloring = cert.visits_to_coloring(res.exploration)
        assert all(coloring[a] != coloring[b] for a, b in graph.edges)


@pytest.mark.slow
@pytest.mark.parametrize("graph", _non_three_colorable_graphs(), ids=lambda g: f"n{g.number_of_nodes()}m{g.number_of_edges()}")
def test_non_three_colorable_graphs_give_no_exploration(graph):
    s, _ = reduce_3col_to_starexp(graph)
    assert not solve_star_exp(s).explorable


# ---------------------------------------------------------------------------
# Star exploration -> double star Eulerianity
# ---------------------------------------------------------------------------


def test_double_star_shape():
    g, cert = reduce_starexp_to_doublestar(StarInstance.from_times([[1, 2], [3, 4]]))
    assert g.n == 6 and g.m == 8
    assert cert.dummies == ((5, 6), (7, 8))
    assert cert.is_dummy(2) and not cert.is_dummy(1)


def test_odd_leaf_count_gets_one_dummy():
    _, cert = reduce_starexp_to_doublestar(StarInstance.from_times([[1, 2], [3, 4], [5, 9]]))
    assert cert.dummies == ((10, 11),)
    assert cert.total_leaves == 4


def test_exploration_maps_to_circuit_and_back():
    s = StarInstance.from_times([[1, 2], [3, 4]])
    g, cert = reduce_starexp_to_doublestar(s)
    visits = [Visit(0, 1, 2), Visit(1, 3, 4)]
    circuit = cert.visits_to_circuit(visits)
    assert verify_euler_circuit(g, circuit)
    assert cert.circuit_to_visits(circuit) == visits


def test_empty_star_gives_edgeless_double_star():
    g, cert = reduce_starexp_to_doublestar(StarInstance.from_times([]))
    assert g.m == 0 and cert.dummies == ()
    assert solve_temp_euler(g).eulerian


@settings(max_examples=150, deadline=None)
@given(stars(max_edges=3, max_time=8, min_times=1, max_times=3))
def test_double_star_agrees_with_brute_force(s):
    g, _ = reduce_starexp_to_doublestar(s)
    assert (brute_force_temp_euler(g) is not None) == (brute_force_star_exp(s) is not None)


def test_double_star_dp_agrees_with_star_dp(star_suite):
    for s in star_suite(40, max_edges=5, k=3, lifetime=12):
        g, cert = reduce_starexp_to_doublestar(s)
        euler = solve_temp_euler(g)
        assert euler.eulerian == solve_star_exp(s).explorable
        if euler.eulerian:
            assert verify_star_exploration(s, cert.circuit_to_visits(euler.circuit))


# ---------------------------------------------------------------------------
# Clique -> reachability minimization
# ---------------------------------------------------------------------------


def test_clique_image_parameters():
    inst, cert = reduce_clique_to_mrd(nx.complete_graph(3), 3)
    assert inst.graph.n == 13
    assert inst.k == 3 and inst.h == 7
    assert inst.sources == {0}
    assert cert.source_edge(2) == TimeEdge(2, 3)
    assert len({t for e in inst.graph.edges for t in e.times}) == inst.graph.time_edge_count()


def test_clique_maps_to_deletions_and_back():
    inst, cert = reduce_clique_to_mrd(nx.complete_graph(3), 3)
    deletions = cert.clique_to_deletions([0, 1, 2])
    assert deletions == (TimeEdge(0, 1), TimeEdge(1, 2), TimeEdge(2, 3))
    assert verify_deletion_set(inst.graph, inst.sources, deletions, inst.k, inst.h)
    assert cert.deletions_to_clique(deletions) == [0, 1, 2]


def test_negative_clique_size_is_rejected():
    with pytest.raises(ReductionError):
        reduce_clique_to_mrd(nx.path_graph(3), -1)


def test_oversized_clique_clamps_the_limit():
    inst, _ = reduce_clique_to_mrd(nx.path_graph(2), 5)
    assert inst.h == 0
    assert not solve_mrd(inst, max_vimw=20).feasible


def test_has_clique():
    assert has_clique(nx.complete_graph(4), 3) == [0, 1, 2]
    assert has_clique(nx.cycle_graph(5), 3) is None
    assert has_clique(nx.Graph(), 0) == []


@pytest.mark.parametrize("graph, r, expected", [
    (nx.complete_graph(3), 3, True),
    (nx.path_graph(3), 3, False),
    (nx.path_graph(3), 2, True),
])
def test_clique_image_decided_by_dp(graph, r, expected):
    inst, cert = reduce_clique_to_mrd(graph, r)
    res = solve_mrd(inst, max_vimw=20)
    assert res.feasible == expected
    if expected:
        clique = cert.deletions_to_clique(res.deletions)
        assert len(clique) == r
        assert all(graph.has_edge(a, b) for i, a in enumerate(clique) for b in clique[i + 1:])


def _small_graphs(max_nodes: int) -> list[nx.Graph]:
    return [g for g in nx.graph_atlas_g() if 0 < g.number_of_nodes() <= max_nodes]


@pytest.mark.parametrize("index", range(1, 19))
def test_atlas_graphs_agree_with_brute_force(index):
    graph = nx.graph_atlas(index)
    for r in (2, 3):
        inst, _ = reduce_clique_to_mrd(graph, r)
        assert (brute_force_mrd(inst) is not None) == (has_clique(graph, r) is not None)


@pytest.mark.parametrize("r", [3, 4])
def test_graphs_up_to_five_vertices_agree_with_clique_search(r):
    for graph in _small_graphs(5):
        inst, _ = reduce_clique_to_mrd(graph, r)
        assert solve_mrd(inst, max_vimw=40).feasible == (has_clique(graph, r) is not None)


@pytest.mark.slow
@pytest.mark.parametrize("r", [3, 4])
def test_graphs_up_to_six_vertices_agree_with_clique_search(r):
    for graph in _small_graphs(6):
        inst, _ = reduce_clique_to_mrd(graph, r)
        assert solve_mrd(inst, max_vimw=40).feasible == (has_clique(graph, r) is not None)
