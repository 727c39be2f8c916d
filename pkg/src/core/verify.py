# src/core/verify.py

from __future__ import annotations

from typing import Iterable, NamedTuple

from src.core.model import StarInstance, TemporalGraph, TemporalWalk, Visit


class Verdict(NamedTuple):
    """Outcome of a witness check; ``reason`` is ``"ok"`` on success."""

    ok: bool
    reason: str
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


OK = Verdict(True, "ok")


def _fail(reason: str, detail: str = "") -> Verdict:
    return Verdict(False, reason, detail)


def verify_strict_walk(g: TemporalGraph, walk: TemporalWalk) -> Verdict:
    """Steps are incident, use existing times and have strictly increasing times."""
    if not 0 <= walk.start < g.n:
        return _fail("bad-step", f"start vertex {walk.start} does not exist")
    head = walk.start
    last_time = 0
    for pos, step in enumerate(walk.steps):
        if not 0 <= step.edge < g.m:
            return _fail("bad-step", f"step {pos} uses unknown edge {step.edge}")
        e = g.edges[step.edge]
        if head not in (e.u, e.v):
            return _fail("bad-step", f"step {pos} edge {e.u}-{e.v} is not incident with {head}")
        if not e.has_time(step.time):
            return _fail("bad-time", f"step {pos} time {step.time} not in the edge's time set")
        if step.time <= last_time:
            return _fail("time-order", f"step {pos} time {step.time} after {last_time}")
        last_time = step.time
        head = e.other(head)
    return OK


def verify_euler_circuit(g: TemporalGraph, walk: TemporalWalk) -> Verdict:
    """Closed strict walk traversing every edge exactly once."""
    if not walk.steps:
        return OK if g.m == 0 else _fail("empty", "walk has no steps")
    verdict = verify_strict_walk(g, walk)
    if not verdict:
        return verdict
    used: set[int] = set()
    for step in walk.steps:
        if step.edge in used:
            return _fail("edge-repeated", f"edge {step.edge} traversed twice")
        used.add(step.edge)
    if len(used) != g.m:
        missing = sorted(set(range(g.m)) - used)
        return _fail("edge-missing", f"edges never traversed: {missing}")
    if walk.vertices(g)[-1] != walk.start:
        return _fail("not-closed", "walk does not return to its start")
    return OK


def verify_star_exploration(s: StarInstance, visits: Iterable[Visit]) -> Verdict:
    """Exactly one visit per edge, enter < exit on existing times, pairwise disjoint."""
    visits = list(visits)
    counts = [0] * s.m
    for v in visits:
        if not 0 <= v.edge < s.m:
            return _fail("visit-count", f"visit of unknown edge {v.edge}")
        counts[v.edge] += 1
    if any(c != 1 for c in counts):
        bad = [i for i, c in enumerate(counts) if c != 1]
        return _fail("visit-count", f"edges not visited exactly once: {bad}")
    for v in visits:
        e = s.graph.edges[v.edge]
        if not (v.enter < v.exit and e.has_time(v.enter) and e.has_time(v.exit)):
            return _fail("visit-times", f"edge {v.edge} visit ({v.enter}, {v.exit}) is invalid")
    ordered = sorted(visits, key=lambda x: x.enter)
    for a, b in zip(ordered, ordered[1:]):
        if b.enter <= a.exit:
            return _fail("conflict", f"visits of edges {a.edge} and {b.edge} overlap")
    return OK
