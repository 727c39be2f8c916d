# src/euler/oracle.py

from __future__ import annotations

import logging
from typing import Optional

import networkx as nx

from src.core.config import settings
from src.core.errors import ResourceGuardError
from src.core.model import TemporalGraph, TemporalWalk, TimeEdge

logger = logging.getLogger(__name__)


def static_graph(g: TemporalGraph) -> nx.Graph:
    """Underlying static graph restricted to non-isolated vertices."""
    static = nx.Graph()
    static.add_edges_from((e.u, e.v) for e in g.edges)
    return static


def brute_force_temp_euler(g: TemporalGraph, max_edges: Optional[int] = None) -> Optional[TemporalWalk]:
    """
    Exhaustive reference decision: every edge ordering that forms a static
    Euler circuit from some start vertex, with each step taking the earliest
    time after the previous one. Earliest times are optimal for a fixed order,
    so the search is exact.
    """
    cap = settings.euler_oracle_max_edges if max_edges is None else max_edges
    if g.m > cap:
        raise ResourceGuardError(f"Euler oracle limited to {cap} edges", limit=cap, actual=g.m)
    if g.m == 0:
        return TemporalWalk(start=0)
    if not nx.is_eulerian(static_graph(g)):
        return None

    used = [False] * g.m
    steps: list[TimeEdge] = []

    def extend(head: int, start: int, last_time: int) -> bool:
        if len(steps) == g.m:
            return head == start
        for idx in g.incident[head]:
            if used[idx]:
                continue
            t = g.edges[idx].next_time_after(last_time)
            if t is None:
                continue
            used[idx] = True
            steps.append(TimeEdge(idx, t))
            if extend(g.edges[idx].other(head), start, t):
                return True
            steps.pop()
            used[idx] = False
        return False

    for start in sorted({x for e in g.edges for x in (e.u, e.v)}):
        if extend(start, start, 0):
            return TemporalWalk(start=start, steps=tuple(steps))
    return None
