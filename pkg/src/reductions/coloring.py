# src/reductions/coloring.py

"""
3-coloring as star exploration.

Vertices are numbered 1..n. Vertex i owns the times t(i, c) = 2iS + 2c(n+1)
for c = 0..3 and gets a leaf edge e_i carrying all four; its visit
(t(i, c), t(i, c+1)) picks color c. The spacing S is n^2, raised to 3n+4
when that is larger so the windows of consecutive vertices stay disjoint.

Every graph edge {j, l}, j < l, gets one leaf edge per color c with the
times

    t(j, c) + 2l - 1, t(j, c) + 2l, t(l, c) + 2j - 1, t(l, c) + 2j

which can be visited inside the color-c window of j or of l, i.e. unless
both endpoints picked c.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Hashable, Optional

import networkx as nx

from src.core.config import settings
from src.core.errors import ReductionError, ResourceGuardError
from src.core.model import StarInstance, TemporalGraph, Visit

logger = logging.getLogger(__name__)

COLORS = (0, 1, 2)


@dataclass(frozen=True)
class ColoringCertificate:
    """Vertex numbering and edge indices needed to map between the two problems."""

    n: int
    vertices: tuple[Hashable, ...]
    edge_pairs: tuple[tuple[int, int], ...]

    def time(self, i: int, c: int) -> int:
        return 2 * i * self.spacing + 2 * c * (self.n + 1)

    @property
    def spacing(self) -> int:
        return max(self.n * self.n, 3 * self.n + 4)

    def vertex_edge(self, i: int) -> int:
        """Star edge of vertex i (1-based)."""
        return i - 1

    def gadget_edge(self, pair_index: int, c: int) -> int:
        return self.n + 3 * pair_index + c

    def coloring_to_visits(self, coloring: dict[Hashable, int]) -> list[Visit]:
        number = {v: i + 1 for i, v in enumerate(self.vertices)}
        color = {number[v]: c for v, c in coloring.items()}
        visits = [Visit(self.vertex_edge(i), self.time(i, color[i]), self.time(i, color[i] + 1))
                  for i in range(1, self.n + 1)]
        for p, (j, l) in enumerate(self.edge_pairs):
            if color[j] == color[l]:
                raise ReductionError(f"coloring is not proper on {self.vertices[j - 1]}-{self.vertices[l - 1]}")
            for c in COLORS:
                if color[j] != c:
                    base, other = self.time(j, c), l
                else:
                    base, other = self.time(l, c), j
                visits.append(Visit(self.gadget_edge(p, c), base + 2 * other - 1, base + 2 * other))
        return sorted(visits, key=lambda v: v.enter)

    def visits_to_coloring(self, visits: list[Visit]) -> dict[Hashable, int]:
        by_edge = {v.edge: v for v in visits}
        coloring: dict[Hashable, int] = {}
        for i in range(1, self.n + 1):
            enter = by_edge[self.vertex_edge(i)].enter
            c = next((c for c in COLORS if self.time(i, c) <= enter < self.time(i, c + 1)), None)
            if c is None:
                raise ReductionError(f"visit of vertex {self.vertices[i - 1]} does not select a color")
            coloring[self.vertices[i - 1]] = c
        return coloring


def reduce_3col_to_starexp(graph: nx.Graph) -> tuple[StarInstance, ColoringCertificate]:
    vertices = tuple(sorted(graph.nodes))
    n = len(vertices)
    number = {v: i + 1 for i, v in enumerate(vertices)}
    pairs = tuple(sorted((min(number[a], number[b]), max(number[a], number[b])) for a, b in graph.edges))
    if any(j == l for j, l in pairs):
        raise ReductionError("self-loops cannot be colored")
    cert = ColoringCertificate(n=n, vertices=vertices, edge_pairs=pairs)

    times: list[list[int]] = [[cert.time(i, c) for c in range(4)] for i in range(1, n + 1)]
    for j, l in pairs:
        for c in COLORS:
            times.append([
                cert.time(j, c) + 2 * l - 1, cert.time(j, c) + 2 * l,
                cert.time(l, c) + 2 * j - 1, cert.time(l, c) + 2 * j,
            ])
    labels = ["c"] + [f"v{v}" for v in vertices] + [
        f"e{vertices[j - 1]}_{vertices[l - 1]}_{c}" for j, l in pairs for c in COLORS
    ]
    g = TemporalGraph.build(len(times) + 1, [(0, idx + 1, ts) for idx, ts in enumerate(times)], labels)
    logger.debug("3-coloring star: %d leaves for n=%d m=%d", len(times), n, len(pairs))
    return StarInstance(g, 4), cert


def is_three_colorable(graph: nx.Graph, max_vertices: Optional[int] = None) -> Optional[dict[Hashable, int]]:
    """Exhaustive search, first vertex fixed to color 0."""
    cap = settings.coloring_oracle_max_vertices if max_vertices is None else max_vertices
    vertices = sorted(graph.nodes)
    if len(vertices) > cap:
        raise ResourceGuardError(f"coloring oracle limited to {cap} vertices", limit=cap, actual=len(vertices))
    if not vertices:
        return {}
    for rest in itertools.product(COLORS, repeat=len(vertices) - 1):
        coloring = dict(zip(vertices, (0,) + rest))
        if all(coloring[a] != coloring[b] for a, b in graph.edges):
            return coloring
    return None
