# src/star/reduction.py

"""
Star exploration as temporal Eulerianity: every star edge becomes a
triangle through the center.

For a normalized edge with even times t_1 < ... < t_m, triangle (c, x1, x2)
gets

    c-x1   {t_1, ..., t_{m-1}}
    x1-x2  {t_1 + 1, ..., t_{m-1} + 1}
    x2-c   {t_2, ..., t_m}

A visit (a, b) is the pass c-x1 at a, x1-x2 at a+1, x2-c at b. Conversely
the time window a circuit spends in a triangle always contains a visit.
"""

from __future__ import annotations

import bisect
import logging
from dataclasses import dataclass
from typing import Optional, Union

from src.core.errors import PreconditionError, TempoError
from src.core.model import StarInstance, TemporalGraph, TemporalWalk, Visit
from src.star.normalize import NormalizedStar

logger = logging.getLogger(__name__)

CENTER = 0


@dataclass(frozen=True)
class TriangleMap:
    """``triangles[j]`` holds the gadget edge indices (c-x1, x1-x2, x2-c) of star edge j."""

    normalized: NormalizedStar
    triangles: tuple[tuple[int, int, int], ...]

    def gadget_of(self) -> dict[int, tuple[int, int]]:
        """Gadget edge index -> (star edge, position 0..2)."""
        return {f: (j, pos) for j, tri in enumerate(self.triangles) for pos, f in enumerate(tri)}


def _as_normalized(s: Union[StarInstance, NormalizedStar]) -> NormalizedStar:
    if isinstance(s, NormalizedStar):
        return s
    for idx, e in enumerate(s.graph.edges):
        if len(e.times) < 2:
            raise PreconditionError(f"star edge {idx} needs at least two times")
        if any(t % 2 for t in e.times):
            raise PreconditionError(f"star edge {idx} has odd times; normalize the star first")
    return NormalizedStar(star=s, original=s, k=s.k, scale=1, missing=tuple(s.k - len(e.times) for e in s.graph.edges))


def reduce_star_to_euler(s: Union[StarInstance, NormalizedStar]) -> tuple[TemporalGraph, TriangleMap]:
    ns = _as_normalized(s)
    edges: list[tuple[int, int, tuple[int, ...]]] = []
    triangles: list[tuple[int, int, int]] = []
    for j, e in enumerate(ns.star.graph.edges):
        ts = e.times
        x1, x2 = 2 * j + 1, 2 * j + 2
        base = len(edges)
        edges.append((CENTER, x1, ts[:-1]))
        edges.append((x1, x2, tuple(t + 1 for t in ts[:-1])))
        edges.append((x2, CENTER, ts[1:]))
        triangles.append((base, base + 1, base + 2))
    image = TemporalGraph.build(2 * ns.star.m + 1, edges)
    logger.debug("Triangle image: n=%d m=%d", image.n, image.m)
    return image, TriangleMap(normalized=ns, triangles=tuple(triangles))


def _visit_inside(times: tuple[int, ...], lo: int, hi: Optional[int]) -> tuple[int, int]:
    """Earliest visit with lo <= enter < exit (<= hi when given)."""
    i = bisect.bisect_left(times, lo)
    if i + 1 < len(times) and (hi is None or times[i + 1] <= hi):
        return times[i], times[i + 1]
    raise TempoError(f"no visit inside the window [{lo}, {hi}]")


def circuit_to_exploration(tmap: TriangleMap, circuit: TemporalWalk) -> list[Visit]:
    """
    Map a circuit of the triangle image back to an exploration of the star.

    The steps of a triangle are consecutive unless the circuit starts at one
    of its leaves. Then either the first two steps (x1-x2 first, window from
    its time minus one to the second step) or the last two steps (the window
    opening at the first of them, with nothing after it) hold the visit.
    """
    ns = tmap.normalized
    gadget = tmap.gadget_of()
    positions: dict[int, list[int]] = {}
    for pos, step in enumerate(circuit.steps):
        positions.setdefault(gadget[step.edge][0], []).append(pos)

    visits: list[Visit] = []
    for j in range(len(tmap.triangles)):
        idxs = sorted(positions.get(j, []))
        if len(idxs) != 3:
            raise TempoError(f"circuit does not traverse triangle {j} exactly once per edge")
        times = [circuit.steps[i].time for i in idxs]
        hi: Optional[int]
        if idxs[2] - idxs[0] == 2:
            lo, hi = times[0], times[2]
        elif idxs[1] == 1:
            lo, hi = times[0] - 1, times[1]
        else:
            lo, hi = times[1], None
        enter, exit_ = _visit_inside(ns.star.times(j), lo, hi)
        visits.append(Visit(j, enter, exit_))
    return sorted(ns.unscale(visits), key=lambda v: v.enter)
