# src/reductions/clique.py

"""
Clique as reachability minimization on a graph whose time-edges all have
distinct times, so the edge width is 1.

Vertex ids: s = 0, graph vertex i -> 1 + i, graph edge j -> 1 + n + j and
the two connectors of edge j -> 1 + n + m + 2j (+1). The source reaches
vertex i at time i + 1; edge j = {a, b}, a < b, is reached through its
connectors at times n+4j+1 .. n+4j+4 (0-based j); every connector also has
a late direct edge from s. Deleting the k = r source edges of a clique hides
the r vertices and the C(r, 2) edge vertices between them, and nothing else
hides as many with r deletions.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from math import comb
from typing import Hashable, Iterable, Optional

import networkx as nx

from src.core.errors import ReductionError
from src.core.model import TemporalGraph, TimeEdge
from src.reach.mrd import MrdInstance

logger = logging.getLogger(__name__)

SOURCE = 0


@dataclass(frozen=True)
class CliqueCertificate:
    vertices: tuple[Hashable, ...]
    edge_pairs: tuple[tuple[int, int], ...]
    r: int

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edge_pairs)

    def vertex_id(self, i: int) -> int:
        return 1 + i

    def edge_id(self, j: int) -> int:
        return 1 + self.n + j

    def connector_id(self, j: int, side: int) -> int:
        return 1 + self.n + self.m + 2 * j + side

    def source_edge(self, i: int) -> TimeEdge:
        """Time-edge s -> vertex i; source edges come first in edge order."""
        return TimeEdge(i, i + 1)

    def clique_to_deletions(self, clique: Iterable[Hashable]) -> tuple[TimeEdge, ...]:
        index = {v: i for i, v in enumerate(self.vertices)}
        return tuple(sorted(self.source_edge(index[v]) for v in clique))

    def deletions_to_clique(self, deletions: Iterable[TimeEdge]) -> list[Hashable]:
        """Graph vertices whose source edge was deleted."""
        picked = sorted(d.edge for d in deletions if d.edge < self.n)
        return [self.vertices[i] for i in picked]


def reduce_clique_to_mrd(graph: nx.Graph, r: int) -> tuple[MrdInstance, CliqueCertificate]:
    if r < 0:
        raise ReductionError(f"clique size must be non-negative, got {r}")
    vertices = tuple(sorted(graph.nodes))
    index = {v: i for i, v in enumerate(vertices)}
    pairs = tuple(sorted((min(index[a], index[b]), max(index[a], index[b])) for a, b in graph.edges))
    if any(a == b for a, b in pairs):
        raise ReductionError("self-loops are not allowed")
    cert = CliqueCertificate(vertices=vertices, edge_pairs=pairs, r=r)
    n, m = cert.n, cert.m

    edges: list[tuple[int, int, tuple[int, ...]]] = []
    for i in range(n):
        edges.append((SOURCE, cert.vertex_id(i), (i + 1,)))
    for j, (a, b) in enumerate(pairs):
        base = n + 4 * j
        wa, wb = cert.connector_id(j, 0), cert.connector_id(j, 1)
        edges.append((cert.vertex_id(a), wa, (base + 1,)))
        edges.append((cert.vertex_id(b), wb, (base + 2,)))
        edges.append((wa, cert.edge_id(j), (base + 3,)))
        edges.append((wb, cert.edge_id(j), (base + 4,)))
    for idx in range(2 * m):
        edges.append((SOURCE, 1 + n + m + idx, (n + 4 * m + idx + 1,)))

    g = TemporalGraph.build(1 + n + 3 * m, edges)
    h = 1 + (n - r) + 2 * m + (m - comb(r, 2))
    logger.debug("Clique reduction: n=%d m=%d r=%d -> h=%d", n, m, r, h)
    return MrdInstance.of(g, [SOURCE], k=r, h=max(h, 0)), cert


def has_clique(graph: nx.Graph, r: int) -> Optional[list[Hashable]]:
    """Some r-clique (sorted), or None."""
    if r <= 0:
        return []
    for maximal in nx.find_cliques(graph):
        if len(maximal) >= r:
            return sorted(itertools.islice(sorted(maximal), r))
    return None
