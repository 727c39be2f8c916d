# src/core/model.py

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence

from src.core.errors import PreconditionError


class TimeEdge(NamedTuple):
    """An edge index paired with one of its times."""

    edge: int
    time: int


class Visit(NamedTuple):
    """Entering and exiting times of a star edge, enter < exit."""

    edge: int
    enter: int
    exit: int


@dataclass(frozen=True)
class TemporalEdge:
    u: int
    v: int
    times: tuple[int, ...]

    @property
    def first(self) -> int:
        return self.times[0]

    @property
    def last(self) -> int:
        return self.times[-1]

    def other(self, x: int) -> int:
        """Endpoint opposite to x."""
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise PreconditionError(f"vertex {x} is not an endpoint of {self.u}-{self.v}")

    def has_time(self, t: int) -> bool:
        i = bisect.bisect_left(self.times, t)
        return i < len(self.times) and self.times[i] == t

    def next_time_after(self, t: int) -> Optional[int]:
        """Smallest time of this edge strictly greater than t."""
        i = bisect.bisect_right(self.times, t)
        return self.times[i] if i < len(self.times) else None


@dataclass(frozen=True)
class TemporalGraph:
    """
    Simple undirected graph on vertices 0..n-1 where every edge carries a
    non-empty sorted set of positive integer times.

    Edges are stored in their input order; ``edges[i]`` is edge index i.
    """

    n: int
    edges: tuple[TemporalEdge, ...]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise PreconditionError(f"vertex count must be non-negative, got {self.n}")
        seen: set[tuple[int, int]] = set()
        for idx, e in enumerate(self.edges):
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise PreconditionError(f"edge {idx} ({e.u}-{e.v}) has an endpoint outside 0..{self.n - 1}")
            if e.u == e.v:
                raise PreconditionError(f"edge {idx} is a self-loop at {e.u}")
            key = (min(e.u, e.v), max(e.u, e.v))
            if key in seen:
                raise PreconditionError(f"edge {idx} duplicates the pair {key[0]}-{key[1]}")
            seen.add(key)
            if not e.times:
                raise PreconditionError(f"edge {idx} has an empty time set")
            if e.times[0] < 1:
                raise PreconditionError(f"edge {idx} has non-positive time {e.times[0]}")
            if any(a >= b for a, b in zip(e.times, e.times[1:])):
                raise PreconditionError(f"edge {idx} times are not strictly increasing")
        if self.labels is not None and len(self.labels) != self.n:
            raise PreconditionError("label table length differs from the vertex count")

    @classmethod
    def build(
        cls,
        n: int,
        edges: Iterable[tuple[int, int, Iterable[int]]],
        labels: Optional[Sequence[str]] = None,
    ) -> "TemporalGraph":
        """Convenience constructor: time sets are deduplicated and sorted."""
        built = tuple(TemporalEdge(u, v, tuple(sorted(set(ts)))) for u, v, ts in edges)
        return cls(n=n, edges=built, labels=tuple(labels) if labels is not None else None)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def lifetime(self) -> Optional[int]:
        """Largest time on any edge; None for an edgeless graph."""
        if not self.edges:
            return None
        return max(e.last for e in self.edges)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident with each vertex, ascending."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            inc[e.u].append(i)
            inc[e.v].append(i)
        return tuple(tuple(lst) for lst in inc)

    @cached_property
    def _by_time(self) -> dict[int, tuple[int, ...]]:
        grouped: dict[int, list[int]] = {}
        for i, e in enumerate(self.edges):
            for t in e.times:
                grouped.setdefault(t, []).append(i)
        return {t: tuple(v) for t, v in sorted(grouped.items())}

    def time_edge_count(self) -> int:
        return sum(len(e.times) for e in self.edges)

    def event_times(self) -> tuple[int, ...]:
        """Distinct times at which at least one edge is active, ascending."""
        return tuple(self._by_time)

    def active_edges_at(self, t: int) -> tuple[int, ...]:
        """E_t: indices of the edges whose time set contains t."""
        if self.lifetime is None or not 1 <= t <= self.lifetime:
            raise PreconditionError(f"time {t} outside the lifetime 1..{self.lifetime or 0}")
        return self._by_time.get(t, ())

    def active_time_edges(self) -> list[TimeEdge]:
        """All time-edges sorted by (time, edge index)."""
        return [TimeEdge(i, t) for t, idxs in self._by_time.items() for i in idxs]

    def label(self, v: int) -> str:
        if self.labels is not None:
            return self.labels[v]
        return str(v)


@dataclass(frozen=True)
class TemporalWalk:
    """A walk given by its start vertex and its (edge, time) steps."""

    start: int
    steps: tuple[TimeEdge, ...] = field(default_factory=tuple)

    def vertices(self, g: TemporalGraph) -> list[int]:
        """Vertex sequence; assumes every step is incident with the current head."""
        seq = [self.start]
        for step in self.steps:
            seq.append(g.edges[step.edge].other(seq[-1]))
        return seq

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class StarInstance:
    """
    A temporal star: vertex 0 is the center, every edge joins the center
    with a distinct leaf. ``k`` bounds the number of times per edge.
    """

    graph: TemporalGraph
    k: int

    def __post_init__(self) -> None:
        for idx, e in enumerate(self.graph.edges):
            if 0 not in (e.u, e.v):
                raise PreconditionError(f"edge {idx} ({e.u}-{e.v}) is not incident with the center 0")
            if len(e.times) > self.k:
                raise PreconditionError(
                    f"edge {idx} has {len(e.times)} times, more than k={self.k}",
                    details={"edge": idx, "times": len(e.times), "k": self.k},
                )

    @classmethod
    def from_graph(cls, g: TemporalGraph, k: Optional[int] = None) -> "StarInstance":
        measured = max((len(e.times) for e in g.edges), default=0)
        return cls(graph=g, k=measured if k is None else k)

    @classmethod
    def from_times(cls, times: Sequence[Iterable[int]], k: Optional[int] = None) -> "StarInstance":
        """Star whose edge i joins the center with leaf i+1."""
        g = TemporalGraph.build(len(times) + 1, [(0, i + 1, ts) for i, ts in enumerate(times)])
        return cls.from_graph(g, k)

    @property
    def m(self) -> int:
        return self.graph.m

    def times(self, edge: int) -> tuple[int, ...]:
        return self.graph.edges[edge].times


class GapProfile(NamedTuple):
    """Measured parameters: max times per edge, min and max consecutive gap."""

    k: int
    ell: Optional[int]
    u: Optional[int]


def gap_profile(g: TemporalGraph) -> GapProfile:
    gaps = [b - a for e in g.edges for a, b in zip(e.times, e.times[1:])]
    k = max((len(e.times) for e in g.edges), default=0)
    if not gaps:
        return GapProfile(k=k, ell=None, u=None)
    return GapProfile(k=k, ell=min(gaps), u=max(gaps))


def lifetime(g: TemporalGraph) -> Optional[int]:
    return g.lifetime


def active_edges_at(g: TemporalGraph, t: int) -> tuple[int, ...]:
    return g.active_edges_at(t)


def active_time_edges(g: TemporalGraph) -> list[TimeEdge]:
    return g.active_time_edges()
