# tests/conftest.py

from __future__ import annotations

import pytest

from src.cli.generators import GenSpec, gap_bounded_star, random_star, random_temporal
from src.core.model import StarInstance, TemporalGraph


@pytest.fixture
def four_leaf_star() -> StarInstance:
    """Star with edges cw {1,9}, cx {3,5}, cy {4,6}, cz {7,8,9}."""
    return StarInstance.from_times([[1, 9], [3, 5], [4, 6], [7, 8, 9]])


@pytest.fixture
def triangle() -> TemporalGraph:
    return TemporalGraph.build(3, [(0, 1, [1]), (1, 2, [2]), (2, 0, [3])])


@pytest.fixture
def temporal_suite():
    """Seeded random temporal graphs: (n, m, k, lifetime) varied with the seed."""
    def build(count: int, n: int = 5, max_m: int = 7, k: int = 3, lifetime: int = 10):
        graphs = []
        for seed in range(count):
            m = seed % (max_m + 1)
            m = min(m, n * (n - 1) // 2)
            graphs.append(random_temporal(GenSpec(seed=seed, n=n, m=m, k=k, lifetime=lifetime)))
        return graphs
    return build


@pytest.fixture
def star_suite():
    def build(count: int, max_edges: int = 6, k: int = 4, lifetime: int = 16):
        return [
            random_star(GenSpec(family="random-star", seed=seed, n=1 + seed % max_edges, k=k, lifetime=lifetime))
            for seed in range(count)
        ]
    return build


@pytest.fixture
def gap_star_suite():
    def build(count: int, max_edges: int = 6, k: int = 3, ell: int = 1, u: int = 3, lifetime: int = 10):
        return [
            gap_bounded_star(
                GenSpec(family="gap-bounded-star", seed=seed, n=1 + seed % max_edges, k=k, ell=ell, u=u,
                        lifetime=lifetime)
            )
            for seed in range(count)
        ]
    return build
