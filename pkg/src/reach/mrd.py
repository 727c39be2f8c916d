# src/reach/mrd.py

"""
Minimizing temporal reachability by deleting time-edges.

The dynamic program runs over the vertex bag sequence. A state ``(r, f)``
records how many vertices are reached so far (sources included) and which
non-source vertices of the current bag are reached, as a bitmask over vertex
ids. Each state keeps the fewest deletions that produce it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Optional

from src.core.config import settings
from src.core.errors import PreconditionError, ResourceGuardError
from src.core.model import TemporalGraph, TimeEdge
from src.reach.reachability import temporal_reach
from src.width.bags import vertex_bag_sequence

logger = logging.getLogger(__name__)

Key = tuple[int, int]


@dataclass(frozen=True)
class MrdInstance:
    graph: TemporalGraph
    sources: frozenset[int]
    k: int
    h: int

    def __post_init__(self) -> None:
        bad = [v for v in self.sources if not 0 <= v < self.graph.n]
        if bad:
            raise PreconditionError(f"sources outside the vertex range: {sorted(bad)}")
        if self.k < 0 or self.h < 0:
            raise PreconditionError(f"k and h must be non-negative, got k={self.k} h={self.h}")

    @classmethod
    def of(cls, g: TemporalGraph, sources: Iterable[int], k: int, h: int) -> "MrdInstance":
        return cls(graph=g, sources=frozenset(sources), k=k, h=h)


@dataclass
class _Entry:
    cost: int
    pred: Optional[Key]
    deleted: tuple[TimeEdge, ...]


@dataclass(frozen=True)
class MrdLayerStats:
    time: int
    bag_size: int
    states: int
    pruned: int


@dataclass
class MrdResult:
    """A minimum deletion set meeting the reach limit, or ``deletions=None``."""

    deletions: Optional[tuple[TimeEdge, ...]]
    reach: Optional[frozenset[int]] = None
    stats: list[MrdLayerStats] = field(default_factory=list)
    width: int = 0

    @property
    def feasible(self) -> bool:
        return self.deletions is not None

    @property
    def cost(self) -> Optional[int]:
        return None if self.deletions is None else len(self.deletions)


def _dominated(a: Key, ca: int, b: Key, cb: int) -> bool:
    """
    True when state b makes state a useless: b reached a subset of a's bag
    vertices at no higher cost, and even catching up on the difference
    later leaves b's count at most a's.
    """
    (ra, fa), (rb, fb) = a, b
    if a == b or cb > ca or fb & ~fa:
        return False
    return rb + bin(fa & ~fb).count("1") <= ra


def _prune(layer: dict[Key, _Entry]) -> tuple[dict[Key, _Entry], int]:
    keys = list(layer)
    kept = {
        a: layer[a]
        for a in keys
        if not any(_dominated(a, layer[a].cost, b, layer[b].cost) for b in keys)
    }
    return kept, len(layer) - len(kept)


class MrdDP:
    def __init__(self, inst: MrdInstance, prune: bool = True) -> None:
        self.inst = inst
        self.prune = prune
        self.layers: list[dict[Key, _Entry]] = []
        self.stats: list[MrdLayerStats] = []

    def run(self) -> Optional[Key]:
        inst, g = self.inst, self.inst.graph
        sources = inst.sources
        if len(sources) > inst.h:
            logger.debug("Sources alone exceed h=%d", inst.h)
            return None
        self.layers = [{(len(sources), 0): _Entry(0, None, ())}]

        intervals = vertex_bag_sequence(g).intervals
        for t in g.event_times():
            bag_mask = 0
            for v, iv in enumerate(intervals):
                if iv is not None and iv[0] <= t <= iv[1]:
                    bag_mask |= 1 << v
            active = g.active_edges_at(t)
            prev = self.layers[-1]
            layer: dict[Key, _Entry] = {}

            for key in sorted(prev):
                entry = prev[key]
                r, f = key
                flags = f & bag_mask

                def reached(x: int) -> bool:
                    return x in sources or bool(flags >> x & 1)

                # only edges with exactly one reached endpoint can spread
                spreading: list[tuple[int, int]] = []
                for idx in active:
                    e = g.edges[idx]
                    if reached(e.u) != reached(e.v):
                        spreading.append((idx, e.v if reached(e.u) else e.u))

                budget = inst.k - entry.cost
                for size in range(min(budget, len(spreading)) + 1):
                    for dropped in combinations(range(len(spreading)), size):
                        skip = set(dropped)
                        new = {target for pos, (_, target) in enumerate(spreading) if pos not in skip}
                        r_next = r + len(new)
                        if r_next > inst.h:
                            continue
                        f_next = flags
                        for x in new:
                            f_next |= 1 << x
                        cost = entry.cost + size
                        nxt = (r_next, f_next)
                        if nxt not in layer or cost < layer[nxt].cost:
                            deleted = tuple(TimeEdge(spreading[pos][0], t) for pos in dropped)
                            layer[nxt] = _Entry(cost, key, deleted)

            pruned = 0
            if self.prune:
                layer, pruned = _prune(layer)
            self.layers.append(layer)
            self.stats.append(
                MrdLayerStats(time=t, bag_size=bin(bag_mask).count("1"), states=len(layer), pruned=pruned)
            )
            if not layer:
                return None

        final = self.layers[-1]
        return min(final, key=lambda key: (final[key].cost, key))

    def deletions_for(self, key: Key) -> tuple[TimeEdge, ...]:
        collected: list[TimeEdge] = []
        current: Optional[Key] = key
        for j in range(len(self.layers) - 1, -1, -1):
            assert current is not None
            entry = self.layers[j][current]
            collected.extend(entry.deleted)
            current = entry.pred
        return tuple(sorted(collected, key=lambda d: (d.time, d.edge)))


def solve_mrd(inst: MrdInstance, prune: bool = True, max_vimw: Optional[int] = None) -> MrdResult:
    """
    Minimum-cardinality deletion set of at most k time-edges leaving at most
    h vertices reachable from the sources.
    """
    limit = settings.mrd_max_vimw if max_vimw is None else max_vimw
    width = vertex_bag_sequence(inst.graph).width
    if width > limit:
        raise ResourceGuardError(f"vertex width {width} exceeds the guard {limit}", limit=limit, actual=width)

    dp = MrdDP(inst, prune=prune)
    best = dp.run()
    if best is None:
        return MrdResult(deletions=None, stats=dp.stats, width=width)
    deletions = dp.deletions_for(best)
    reach = temporal_reach(inst.graph, inst.sources, deletions)
    logger.debug("MRD: %d deletions, reach %d, peak layer %d", len(deletions), len(reach),
                 max((s.states for s in dp.stats), default=1))
    return MrdResult(deletions=deletions, reach=reach, stats=dp.stats, width=width)


def brute_force_mrd(inst: MrdInstance, max_subsets: Optional[int] = None) -> Optional[tuple[TimeEdge, ...]]:
    """Reference decision: every set of at most k time-edges, smallest first."""
    cap = settings.mrd_oracle_max_subsets if max_subsets is None else max_subsets
    time_edges = inst.graph.active_time_edges()
    top = min(inst.k, len(time_edges))
    total = sum(comb(len(time_edges), j) for j in range(top + 1))
    if total > cap:
        raise ResourceGuardError(f"MRD oracle limited to {cap} subsets", limit=cap, actual=total)
    for size in range(top + 1):
        for subset in combinations(time_edges, size):
            if len(temporal_reach(inst.graph, inst.sources, subset)) <= inst.h:
                return tuple(subset)
    return None
