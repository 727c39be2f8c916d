# src/cli/generators.py

"""
Seeded random instance families.

Every family draws from ``numpy.random.default_rng(seed)`` (PCG64), so a
seed reproduces an instance across runs and platforms.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, Field, model_validator

from src.core.model import StarInstance, TemporalGraph
from src.star.normalize import normalize_star
from src.star.reduction import reduce_star_to_euler

logger = logging.getLogger(__name__)

Family = Literal["random-temporal", "random-star", "gap-bounded-star", "euler-image"]


class GenSpec(BaseModel):
    """
    Parameters of a generated instance.

    ``n`` is the vertex count for random-temporal and the leaf count for the
    star families. ``k`` caps the times per edge; ``ell`` and ``u`` bound the
    gaps of gap-bounded stars.
    """

    family: Family = "random-temporal"
    seed: int = 0
    n: int = Field(default=6, ge=0)
    m: Optional[int] = Field(default=None, ge=0)
    k: int = Field(default=3, ge=1)
    lifetime: int = Field(default=20, ge=1)
    ell: int = Field(default=1, ge=1)
    u: int = Field(default=3, ge=1)

    @model_validator(mode="after")
    def _check_ranges(self) -> "GenSpec":
        if self.ell > self.u:
            raise ValueError(f"ell ({self.ell}) must not exceed u ({self.u})")
        if self.family == "random-temporal" and self.m is not None and self.m > self.n * (self.n - 1) // 2:
            raise ValueError(f"m={self.m} exceeds the number of vertex pairs for n={self.n}")
        if self.family != "random-temporal" and self.k < 2:
            raise ValueError("star families need k >= 2")
        if self.family != "random-temporal" and self.lifetime < 2:
            raise ValueError("star families need a lifetime of at least 2")
        return self


def _times(rng: np.random.Generator, count: int, lifetime: int) -> list[int]:
    count = min(count, lifetime)
    return sorted(int(t) for t in rng.choice(np.arange(1, lifetime + 1), size=count, replace=False))


def random_temporal(spec: GenSpec) -> TemporalGraph:
    rng = np.random.default_rng(spec.seed)
    pairs = list(combinations(range(spec.n), 2))
    m = len(pairs) if spec.m is None else spec.m
    chosen = sorted(int(i) for i in rng.choice(len(pairs), size=m, replace=False)) if m else []
    edges = []
    for i in chosen:
        u, v = pairs[i]
        count = int(rng.integers(1, spec.k + 1))
        edges.append((u, v, _times(rng, count, spec.lifetime)))
    return TemporalGraph.build(spec.n, edges)


def random_star(spec: GenSpec) -> StarInstance:
    rng = np.random.default_rng(spec.seed)
    times = []
    for _ in range(spec.n):
        count = int(rng.integers(2, spec.k + 1))
        times.append(_times(rng, count, spec.lifetime))
    return StarInstance.from_times(times, k=spec.k)


def gap_bounded_star(spec: GenSpec) -> StarInstance:
    rng = np.random.default_rng(spec.seed)
    times = []
    for _ in range(spec.n):
        count = int(rng.integers(2, spec.k + 1))
        current = int(rng.integers(1, spec.lifetime + 1))
        edge_times = [current]
        for _ in range(count - 1):
            current += int(rng.integers(spec.ell, spec.u + 1))
            edge_times.append(current)
        times.append(edge_times)
    return StarInstance.from_times(times, k=spec.k)


def generate(spec: GenSpec) -> TemporalGraph:
    """Build the instance described by ``spec``."""
    if spec.family == "random-temporal":
        g = random_temporal(spec)
    elif spec.family == "random-star":
        g = random_star(spec).graph
    elif spec.family == "gap-bounded-star":
        g = gap_bounded_star(spec).graph
    else:
        g, _ = reduce_star_to_euler(normalize_star(random_star(spec)))
    logger.debug("Generated %s seed=%d: n=%d m=%d", spec.family, spec.seed, g.n, g.m)
    return g
