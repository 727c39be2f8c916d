# src/star/normalize.py

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

from src.core.errors import PreconditionError, UnvisitableEdgeError
from src.core.model import StarInstance, TemporalGraph, Visit

logger = logging.getLogger(__name__)

SCALE = 2


@dataclass(frozen=True)
class NormalizedStar:
    """
    A star whose times were all doubled, so ``t + 1`` never collides with
    another time of the same edge.

    Edges short of ``k`` times are left as they are: adding any time to a
    star edge creates visits that do not exist in the input, so padding
    cannot preserve explorability. ``missing[j]`` records the shortfall.
    """
    star: StarInstance
    original: StarInstance
    k: int
    scale: int
    missing: tuple[int, ...]

    def unscale(self, visits: Iterable[Visit]) -> list[Visit]:
        return [Visit(v.edge, v.enter // self.scale, v.exit // self.scale) for v in visits]


def normalize_star(s: StarInstance, k: Optional[int] = None) -> NormalizedStar:
    """
    Raises UnvisitableEdgeError for an edge with fewer than two times (the
    instance is a certified no) and PreconditionError for an edge with more
    than k times.
    """
    k = s.k if k is None else k
    for idx, e in enumerate(s.graph.edges):
        if len(e.times) > k:
            raise PreconditionError(f"edge {idx} has {len(e.times)} times, more than k={k}")
        if len(e.times) < 2:
            raise UnvisitableEdgeError(idx, e.times)

    scaled = TemporalGraph.build(
        s.graph.n,
        [(e.u, e.v, (SCALE * t for t in e.times)) for e in s.graph.edges],
        s.graph.labels,
    )
    missing = tuple(k - len(e.times) for e in s.graph.edges)
    logger.debug("Normalized star: m=%d k=%d short edges=%d", s.m, k, sum(1 for p in missing if p))
    return NormalizedStar(star=StarInstance(scaled, k), original=s, k=k, scale=SCALE, missing=missing)
