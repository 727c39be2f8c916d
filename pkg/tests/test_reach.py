# tests/test_reach.py

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import PreconditionError, ResourceGuardError
from src.core.model import TemporalGraph, TimeEdge
from src.reach.mrd import MrdDP, MrdInstance, brute_force_mrd, solve_mrd
from src.reach.reachability import temporal_reach, verify_deletion_set
from tests.strategies import temporal_graphs


@pytest.fixture
def fan() -> TemporalGraph:
    return TemporalGraph.build(4, [(0, 1, [1]), (0, 2, [2]), (1, 3, [3])])


def test_reach_respects_strict_times():
    g = TemporalGraph.build(3, [(0, 1, [2]), (1, 2, [2])])
    assert temporal_reach(g, [0]) == {0, 1}
    g = TemporalGraph.build(3, [(0, 1, [2]), (1, 2, [2, 3])])
    assert temporal_reach(g, [0]) == {0, 1, 2}


def test_reach_ignores_paths_going_back_in_time():
    g = TemporalGraph.build(3, [(0, 1, [5]), (1, 2, [4])])
    assert temporal_reach(g, [0]) == {0, 1}
    assert temporal_reach(g, [2]) == {0, 1, 2}


def test_reach_with_deletions(fan):
    assert temporal_reach(fan, [0]) == {0, 1, 2, 3}
    assert temporal_reach(fan, [0], [TimeEdge(0, 1)]) == {0, 2}


def test_verify_deletion_set(fan):
    assert verify_deletion_set(fan, [0], [TimeEdge(0, 1)], k=1, h=2)
    assert verify_deletion_set(fan, [0], [TimeEdge(0, 1), TimeEdge(1, 2)], k=1, h=2).reason == "too-many-deletions"
    assert verify_deletion_set(fan, [0], [TimeEdge(0, 2)], k=1, h=2).reason == "bad-time"
    assert verify_deletion_set(fan, [0], [TimeEdge(1, 2)], k=1, h=2).reason == "reach-too-large"


def test_single_deletion_cuts_the_branch(fan):
    res = solve_mrd(MrdInstance.of(fan, [0], k=1, h=2))
    assert res.feasible
    assert res.deletions == (TimeEdge(0, 1),)
    assert res.reach == {0, 2}
    assert res.cost == 1
    assert brute_force_mrd(MrdInstance.of(fan, [0], k=1, h=2)) == (TimeEdge(0, 1),)


def test_budget_too_small(fan):
    res = solve_mrd(MrdInstance.of(fan, [0], k=1, h=1))
    assert not res.feasible
    assert res.cost is None
    assert brute_force_mrd(MrdInstance.of(fan, [0], k=1, h=1)) is None


def test_no_deletions_needed(fan):
    res = solve_mrd(MrdInstance.of(fan, [0], k=0, h=4))
    assert res.deletions == ()


def test_sources_alone_exceed_the_limit(fan):
    assert not solve_mrd(MrdInstance.of(fan, [0, 3], k=3, h=1)).feasible


def test_instance_validation(fan):
    with pytest.raises(PreconditionError):
        MrdInstance.of(fan, [7], k=1, h=1)
    with pytest.raises(PreconditionError):
        MrdInstance.of(fan, [0], k=-1, h=1)


def test_width_guard(fan):
    with pytest.raises(ResourceGuardError) as info:
        solve_mrd(MrdInstance.of(fan, [0], k=1, h=2), max_vimw=0)
    assert info.value.limit == 0


def test_unpruned_run_reports_nothing_pruned(fan):
    dp = MrdDP(MrdInstance.of(fan, [0], k=2, h=4), prune=False)
    assert dp.run() is not None
    assert all(s.pruned == 0 for s in dp.stats)
    assert [s.time for s in dp.stats] == [1, 2, 3]


def test_oracle_guard(fan):
    with pytest.raises(ResourceGuardError):
        brute_force_mrd(MrdInstance.of(fan, [0], k=3, h=1), max_subsets=3)


@settings(max_examples=200, deadline=None)
@given(
    temporal_graphs(max_n=5, max_m=6, max_time=6, max_times=2),
    st.integers(0, 2),
    st.integers(1, 5),
    st.booleans(),
)
def test_dp_agrees_with_brute_force(g, k, h, prune):
    inst = MrdInstance.of(g, [0], k=k, h=h)
    res = solve_mrd(inst, prune=prune, max_vimw=10)
    expected = brute_force_mrd(inst)
    assert res.feasible == (expected is not None)
    if res.feasible:
        assert res.cost == len(expected)
        assert verify_deletion_set(g, [0], res.deletions, k, h)


@settings(max_examples=100, deadline=None)
@given(temporal_graphs(max_n=5, max_m=6, max_time=6, max_times=2), st.integers(0, 2), st.integers(2, 5))
def test_multiple_sources(g, k, h):
    inst = MrdInstance.of(g, [0, 1], k=k, h=h)
    res = solve_mrd(inst, max_vimw=10)
    assert res.feasible == (brute_force_mrd(inst) is not None)


@settings(max_examples=100, deadline=None)
@given(temporal_graphs(max_n=5, max_m=6, max_time=6, max_times=2), st.integers(0, 1), st.integers(1, 4))
def test_larger_budgets_never_hurt(g, k, h):
    feasible = solve_mrd(MrdInstance.of(g, [0], k=k, h=h), max_vimw=10).feasible
    if feasible:
        assert solve_mrd(MrdInstance.of(g, [0], k=k + 1, h=h), max_vimw=10).feasible
        assert solve_mrd(MrdInstance.of(g, [0], k=k, h=h + 1), max_vimw=10).feasible


def test_everything_is_a_source(fan):
    assert temporal_reach(fan, range(4)) == {0, 1, 2, 3}
    assert solve_mrd(MrdInstance.of(fan, range(4), k=0, h=4), max_vimw=10).deletions == ()
