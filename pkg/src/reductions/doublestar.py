# src/reductions/doublestar.py

"""
Star exploration as Eulerianity of a double star.

Each leaf x_j of the star is joined to two centers c1, c2, both edges
carrying the times of the star edge. A circuit starting at a center passes
every leaf with two consecutive steps, which is a visit. Dummy leaves after
the lifetime make the leaf count even and rule out circuits that start at
a real leaf, which would not correspond to any exploration.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from src.core.errors import TempoError
from src.core.model import StarInstance, TemporalGraph, TemporalWalk, TimeEdge, Visit

logger = logging.getLogger(__name__)

C1, C2 = 0, 1


@dataclass(frozen=True)
class DoubleStarCertificate:
    """
    Attributes:
        leaves: Number of real leaves (star edges).
        dummies: Dummy visits ``(enter, exit)`` appended after the lifetime.
    """
    leaves: int
    dummies: tuple[tuple[int, int], ...]

    def leaf(self, j: int) -> int:
        return j + 2

    def edges_of(self, j: int) -> tuple[int, int]:
        """Edge indices (c1-x_j, c2-x_j)."""
        return 2 * j, 2 * j + 1

    @property
    def total_leaves(self) -> int:
        return self.leaves + len(self.dummies)

    def is_dummy(self, j: int) -> bool:
        return j >= self.leaves

    def circuit_to_visits(self, circuit: TemporalWalk) -> list[Visit]:
        position = {step.edge: pos for pos, step in enumerate(circuit.steps)}
        visits: list[Visit] = []
        for j in range(self.leaves):
            a, b = (position.get(f) for f in self.edges_of(j))
            if a is None or b is None or abs(a - b) != 1:
                raise TempoError(f"circuit does not pass leaf {j} with two consecutive steps")
            first, second = sorted((a, b))
            visits.append(Visit(j, circuit.steps[first].time, circuit.steps[second].time))
        return sorted(visits, key=lambda v: v.enter)

    def visits_to_circuit(self, visits: list[Visit]) -> TemporalWalk:
        ordered = sorted(visits, key=lambda v: v.enter)
        passes = [(v.edge, v.enter, v.exit) for v in ordered]
        passes += [(self.leaves + d, enter, exit_) for d, (enter, exit_) in enumerate(self.dummies)]
        steps: list[TimeEdge] = []
        for q, (j, enter, exit_) in enumerate(passes):
            to_c1, to_c2 = self.edges_of(j)
            first, second = (to_c1, to_c2) if q % 2 == 0 else (to_c2, to_c1)
            steps.append(TimeEdge(first, enter))
            steps.append(TimeEdge(second, exit_))
        return TemporalWalk(start=C1, steps=tuple(steps))


def reduce_starexp_to_doublestar(s: StarInstance) -> tuple[TemporalGraph, DoubleStarCertificate]:
    lifetime = s.graph.lifetime or 0
    if s.m == 0:
        dummies: tuple[tuple[int, int], ...] = ()
    elif s.m % 2:
        dummies = ((lifetime + 1, lifetime + 2),)
    else:
        dummies = ((lifetime + 1, lifetime + 2), (lifetime + 3, lifetime + 4))
    cert = DoubleStarCertificate(leaves=s.m, dummies=dummies)

    edges: list[tuple[int, int, tuple[int, ...]]] = []
    for j, e in enumerate(s.graph.edges):
        edges.append((C1, cert.leaf(j), e.times))
        edges.append((C2, cert.leaf(j), e.times))
    for d, times in enumerate(dummies):
        leaf = cert.leaf(s.m + d)
        edges.append((C1, leaf, times))
        edges.append((C2, leaf, times))
    g = TemporalGraph.build(2 + cert.total_leaves, edges)
    logger.debug("Double star: %d leaves, %d dummies", s.m, len(dummies))
    return g, cert
