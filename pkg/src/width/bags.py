# src/width/bags.py

"""
Interval-membership bag sequences.

An edge belongs to the bag of every time between its first and last time;
a vertex belongs to the bag of every time between the earliest first time
and the latest last time of its incident edges. The widths are the largest
bag sizes. Bags are derived from the per-member interval table and only
materialized when asked for, so large lifetimes stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from src.core.model import TemporalGraph

Interval = Optional[tuple[int, int]]


@dataclass
class BagSequence:
    """
    Bags over times 1..lifetime, given by one closed interval per member.

    Attributes:
        lifetime: Largest time (0 for an edgeless graph).
        intervals: ``intervals[x]`` is ``(first, last)`` or None when x is in no bag.
        insertions: Number of member insertions performed by ``bags``.
    """
    lifetime: int
    intervals: tuple[Interval, ...]
    insertions: int = field(default=0, init=False)

    @cached_property
    def width(self) -> int:
        """Largest bag size, computed with an endpoint sweep."""
        events: list[tuple[int, int]] = []
        for iv in self.intervals:
            if iv is not None:
                events.append((iv[0], 1))
                events.append((iv[1] + 1, -1))
        best = current = 0
        # removals at t sort before additions at t
        for _, delta in sorted(events, key=lambda ev: (ev[0], ev[1])):
            current += delta
            best = max(best, current)
        return best

    @cached_property
    def bags(self) -> list[tuple[int, ...]]:
        """``bags[t - 1]`` is the bag of time t, members ascending."""
        built: list[list[int]] = [[] for _ in range(self.lifetime)]
        for member, iv in enumerate(self.intervals):
            if iv is None:
                continue
            first, last = iv
            for t in range(first, last + 1):
                built[t - 1].append(member)
                self.insertions += 1
        return [tuple(b) for b in built]

    def bag(self, t: int) -> tuple[int, ...]:
        """Bag of a single time without materializing the whole sequence."""
        if "bags" in self.__dict__:
            return self.bags[t - 1] if 1 <= t <= self.lifetime else ()
        return tuple(x for x, iv in enumerate(self.intervals) if iv is not None and iv[0] <= t <= iv[1])

    def sizes_changes(self) -> list[tuple[int, int]]:
        """Sparse ``(t, size)`` list: the bag size from time t on, until the next entry."""
        deltas: dict[int, int] = {}
        for iv in self.intervals:
            if iv is not None:
                deltas[iv[0]] = deltas.get(iv[0], 0) + 1
                deltas[iv[1] + 1] = deltas.get(iv[1] + 1, 0) - 1
        changes: list[tuple[int, int]] = []
        current = 0
        for t in sorted(deltas):
            if t > self.lifetime:
                break
            current += deltas[t]
            if not changes or changes[-1][1] != current:
                changes.append((t, current))
        return changes


class EdgeBagSequence(BagSequence):
    pass


class VertexBagSequence(BagSequence):
    pass


def edge_intervals(g: TemporalGraph) -> tuple[Interval, ...]:
    return tuple((e.first, e.last) for e in g.edges)


def vertex_intervals(g: TemporalGraph) -> tuple[Interval, ...]:
    intervals: list[Interval] = []
    for v in range(g.n):
        inc = g.incident[v]
        if not inc:
            intervals.append(None)
            continue
        intervals.append((min(g.edges[i].first for i in inc), max(g.edges[i].last for i in inc)))
    return tuple(intervals)


def edge_bag_sequence(g: TemporalGraph) -> EdgeBagSequence:
    return EdgeBagSequence(lifetime=g.lifetime or 0, intervals=edge_intervals(g))


def vertex_bag_sequence(g: TemporalGraph) -> VertexBagSequence:
    return VertexBagSequence(lifetime=g.lifetime or 0, intervals=vertex_intervals(g))


def imw(g: TemporalGraph) -> int:
    """Edge interval-membership width."""
    return edge_bag_sequence(g).width


def vimw(g: TemporalGraph) -> int:
    """Vertex interval-membership width."""
    return vertex_bag_sequence(g).width


def naive_edge_bags(g: TemporalGraph) -> list[tuple[int, ...]]:
    # direct definition, used as a cross-check
    lifetime = g.lifetime or 0
    return [
        tuple(i for i, e in enumerate(g.edges) if e.first <= t <= e.last)
        for t in range(1, lifetime + 1)
    ]


def naive_vertex_bags(g: TemporalGraph) -> list[tuple[int, ...]]:
    lifetime = g.lifetime or 0
    bags: list[tuple[int, ...]] = []
    for t in range(1, lifetime + 1):
        members = []
        for v in range(g.n):
            times = [x for i in g.incident[v] for x in g.edges[i].times]
            if times and min(times) <= t <= max(times):
                members.append(v)
        bags.append(tuple(members))
    return bags


def start_bag_time(g: TemporalGraph) -> Optional[int]:
    """
    Earliest last time over all edges. Every edge whose interval starts at or
    before this time is still in its bag, so a walk can only begin on the
    endpoints of that bag.
    """
    if not g.edges:
        return None
    return min(e.last for e in g.edges)


def max_active_edges(g: TemporalGraph) -> int:
    """Largest number of edges active at a single time."""
    return max((len(g.active_edges_at(t)) for t in g.event_times()), default=0)
