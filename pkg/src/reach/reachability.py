# src/reach/reachability.py

from __future__ import annotations

from typing import Iterable

from src.core.model import TemporalGraph, TimeEdge
from src.core.verify import Verdict


def temporal_reach(
    g: TemporalGraph,
    sources: Iterable[int],
    deleted: Iterable[TimeEdge] = (),
) -> frozenset[int]:
    """
    Vertices reachable from the sources by strict temporal paths avoiding
    the deleted time-edges, sources included.

    Sweeps times in ascending order; a vertex reached at time t can leave
    only at a time after t, which ``reached_at`` encodes directly.
    """
    removed = set(deleted)
    reached_at: dict[int, int] = {v: 0 for v in sources}
    for t in g.event_times():
        for idx in g.active_edges_at(t):
            if (idx, t) in removed:
                continue
            e = g.edges[idx]
            for a, b in ((e.u, e.v), (e.v, e.u)):
                if a in reached_at and reached_at[a] < t and b not in reached_at:
                    reached_at[b] = t
    return frozenset(reached_at)


def verify_deletion_set(
    g: TemporalGraph,
    sources: Iterable[int],
    deletions: Iterable[TimeEdge],
    k: int,
    h: int,
) -> Verdict:
    deletions = list(deletions)
    if len(set(deletions)) > k:
        return Verdict(False, "too-many-deletions", f"{len(set(deletions))} deletions, budget {k}")
    for d in deletions:
        if not (0 <= d.edge < g.m and g.edges[d.edge].has_time(d.time)):
            return Verdict(False, "bad-time", f"({d.edge}, {d.time}) is not a time-edge")
    reach = temporal_reach(g, sources, deletions)
    if len(reach) > h:
        return Verdict(False, "reach-too-large", f"{len(reach)} vertices reached, limit {h}")
    return Verdict(True, "ok")
