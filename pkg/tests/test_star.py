# tests/test_star.py

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from src.core.errors import PreconditionError, UnvisitableEdgeError
from src.core.model import StarInstance, TemporalWalk, TimeEdge, Visit
from src.core.verify import verify_euler_circuit, verify_star_exploration
from src.star.normalize import SCALE, normalize_star
from src.star.reduction import circuit_to_exploration, reduce_star_to_euler
from src.star.solver import (
    brute_force_star_exp,
    solve_star_evenly_spaced,
    solve_star_exp,
    solve_star_winwin,
)
from src.width.bags import imw
from tests.strategies import stars


def test_normalize_doubles_times_and_records_shortfall():
    s = StarInstance.from_times([[1, 2], [3, 5, 6]])
    ns = normalize_star(s)
    assert ns.scale == SCALE == 2
    assert ns.star.times(0) == (2, 4)
    assert ns.star.times(1) == (6, 10, 12)
    assert ns.missing == (1, 0)
    assert ns.unscale([Visit(1, 6, 10)]) == [Visit(1, 3, 5)]


def test_normalize_rejects_bad_edges():
    with pytest.raises(UnvisitableEdgeError) as info:
        normalize_star(StarInstance.from_times([[1, 2], [4]]))
    assert info.value.edge == 1
    with pytest.raises(PreconditionError):
        normalize_star(StarInstance.from_times([[1, 2, 3]]), k=2)


def test_triangle_image_shape():
    image, tmap = reduce_star_to_euler(normalize_star(StarInstance.from_times([[1, 2, 5], [3, 4]])))
    assert image.n == 5 and image.m == 6
    assert tmap.triangles == ((0, 1, 2), (3, 4, 5))
    assert image.edges[0].times == (2, 4)
    assert image.edges[1].times == (3, 5)
    assert image.edges[2].times == (4, 10)
    assert (image.edges[4].u, image.edges[4].v) == (3, 4)


def test_raw_star_needs_even_times():
    with pytest.raises(PreconditionError):
        reduce_star_to_euler(StarInstance.from_times([[1, 2]]))


@pytest.fixture
def split_star() -> StarInstance:
    return StarInstance.from_times([[2, 4, 10, 12], [6, 8]])


def test_back_mapping_when_circuit_starts_inside_a_triangle(split_star):
    image, tmap = reduce_star_to_euler(split_star)
    walk = TemporalWalk(
        1,
        (TimeEdge(1, 3), TimeEdge(2, 4), TimeEdge(3, 6), TimeEdge(4, 7), TimeEdge(5, 8), TimeEdge(0, 10)),
    )
    assert verify_euler_circuit(image, walk)
    assert circuit_to_exploration(tmap, walk) == [Visit(0, 2, 4), Visit(1, 6, 8)]


def test_back_mapping_when_triangle_closes_the_circuit(split_star):
    image, tmap = reduce_star_to_euler(split_star)
    walk = TemporalWalk(
        1,
        (TimeEdge(0, 2), TimeEdge(3, 6), TimeEdge(4, 7), TimeEdge(5, 8), TimeEdge(2, 10), TimeEdge(1, 11)),
    )
    assert verify_euler_circuit(image, walk)
    visits = circuit_to_exploration(tmap, walk)
    assert visits == [Visit(1, 6, 8), Visit(0, 10, 12)]
    assert verify_star_exploration(split_star, visits)


def test_two_disjoint_edges_are_explorable():
    s = StarInstance.from_times([[1, 2], [3, 4]])
    res = solve_star_exp(s)
    assert res.explorable
    assert res.exploration == [Visit(0, 1, 2), Visit(1, 3, 4)]
    assert res.reason == "dp"


def test_shared_time_blocks_exploration():
    assert not solve_star_exp(StarInstance.from_times([[1, 2], [2, 3]])).explorable


def test_long_edge_blocks_the_rest(four_leaf_star):
    res = solve_star_exp(four_leaf_star)
    assert not res.explorable
    assert res.width == 3
    assert brute_force_star_exp(four_leaf_star) is None


def test_single_time_edge_is_unvisitable():
    res = solve_star_exp(StarInstance.from_times([[1, 2], [5]]))
    assert not res.explorable
    assert res.reason == "unvisitable-edge"


def test_empty_star_is_explorable():
    res = solve_star_exp(StarInstance.from_times([]))
    assert res.explorable
    assert res.exploration == []
    assert res.reason == "empty"


def test_short_edges_keep_their_visits():
    s = StarInstance.from_times([[1, 3, 5], [2, 6]], k=3)
    assert brute_force_star_exp(s) is None
    assert not solve_star_exp(s).explorable


@settings(max_examples=150, deadline=None)
@given(stars(max_edges=4, max_time=10, min_times=1, max_times=3))
def test_dp_agrees_with_brute_force(s):
    res = solve_star_exp(s)
    expected = brute_force_star_exp(s)
    assert res.explorable == (expected is not None)
    if res.explorable:
        assert verify_star_exploration(s, res.exploration)


def test_seeded_stars_agree_with_brute_force(star_suite):
    for s in star_suite(60, max_edges=5):
        assert solve_star_exp(s).explorable == (brute_force_star_exp(s) is not None)


@pytest.mark.slow
def test_all_seeded_stars_agree_with_brute_force(star_suite):
    for s in star_suite(200, max_edges=7):
        assert solve_star_exp(s).explorable == (brute_force_star_exp(s) is not None)


# ---------------------------------------------------------------------------
# Gap-bounded win-win
# ---------------------------------------------------------------------------

def test_winwin_prunes_overlapping_edges():
    res = solve_star_winwin(StarInstance.from_times([[1, 2], [1, 2]]))
    assert res.reason == "width-bound"
    assert res.bound == Fraction(3, 2)
    assert not res.explorable


def test_evenly_spaced_star():
    res = solve_star_evenly_spaced(StarInstance.from_times([[1, 3], [5, 7]]))
    assert res.explorable
    assert res.bound is not None
    with pytest.raises(PreconditionError):
        solve_star_evenly_spaced(StarInstance.from_times([[1, 3], [5, 8]]))


def test_winwin_agrees_with_plain_dp(gap_star_suite):
    for s in gap_star_suite(60, max_edges=5, k=3, ell=1, u=3):
        assert solve_star_winwin(s).explorable == solve_star_exp(s).explorable


def test_winwin_agrees_with_wide_gaps(gap_star_suite):
    for s in gap_star_suite(40, max_edges=5, k=3, ell=2, u=4, lifetime=12):
        assert solve_star_winwin(s, ell=2, u=4).explorable == solve_star_exp(s).explorable


def test_triangle_image_width_and_time_counts(star_suite):
    for s in star_suite(200, max_edges=6, k=4):
        image, tmap = reduce_star_to_euler(normalize_star(s))
        assert imw(image) <= 3 * imw(s.graph)
        for j, e in enumerate(s.graph.edges):
            for f in tmap.triangles[j]:
                assert len(image.edges[f].times) == len(e.times) - 1


def test_explorable_gap_stars_stay_under_the_bound(gap_star_suite):
    for s in gap_star_suite(60, max_edges=5, k=3, ell=1, u=3):
        res = solve_star_winwin(s)
        if brute_force_star_exp(s) is not None:
            assert res.width <= res.bound


def test_width_certificates_are_never_wrong(gap_star_suite):
    certified = 0
    for s in gap_star_suite(100, max_edges=5, k=2, ell=1, u=2, lifetime=4):
        res = solve_star_winwin(s)
        if res.reason == "width-bound":
            certified += 1
            assert brute_force_star_exp(s) is None
    assert certified > 0


@pytest.mark.parametrize("lam", [1, 2, 3])
def test_evenly_spaced_suite_has_width_below_twice_k(gap_star_suite, lam):
    for s in gap_star_suite(40, max_edges=5, k=3, ell=lam, u=lam, lifetime=8):
        res = solve_star_evenly_spaced(s)
        assert res.bound < 2 * s.k
        if res.reason != "width-bound":
            assert res.width < 2 * s.k
            assert res.explorable == (brute_force_star_exp(s) is not None)
