# src/euler/dp.py

"""
Dynamic program deciding whether a temporal graph has a temporal Euler
circuit, running over the edge bag sequence.

A state ``(flags, start, head)`` says: some strict walk starting at ``start``
ends at ``head`` by the current time, traverses every edge that already left
the bag, and traverses exactly the flagged edges among those still in it.
``flags`` is an int bitmask over global edge indices; bits of edges that left
the bag are cleared once checked.

Only times at which some edge is active are processed. Between two such
times no move is possible, so the layer does not change; edges that left
the bag in between are checked at the next processed time.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from src.core.model import TemporalGraph, TemporalWalk, TimeEdge
from src.width.bags import imw, start_bag_time

logger = logging.getLogger(__name__)

State = tuple[int, int, int]
# predecessor state and the step taken (None for staying put)
Back = tuple[Optional[State], Optional[TimeEdge]]


@dataclass(frozen=True)
class LayerStats:
    time: int
    bag_size: int
    states: int
    end_vertices: int
    transitions: int


@dataclass
class EulerResult:
    """
    Outcome of an Euler decision.

    ``bound`` is set when the win-win bound was evaluated; ``pruned_by_bound``
    means the answer is a certified no from that bound alone.
    """
    circuit: Optional[TemporalWalk]
    stats: list[LayerStats] = field(default_factory=list)
    width: int = 0
    bound: Optional[Fraction] = None
    pruned_by_bound: bool = False

    @property
    def eulerian(self) -> bool:
        return self.circuit is not None

    @property
    def peak_layer(self) -> int:
        return max((s.states for s in self.stats), default=0)


class TemporalEulerDP:
    """
    Layered search. After ``run()``, ``layers[j]`` maps each state of the j-th
    processed time (``times[j]``) to its predecessor record; ``layers[0]`` is
    the seed layer at time 0.
    """

    def __init__(self, g: TemporalGraph) -> None:
        self.g = g
        self.times: list[int] = [0]
        self.layers: list[dict[State, Back]] = []
        self.bag_masks: list[int] = [0]
        self.stats: list[LayerStats] = []
        self._accepting: Optional[State] = None

    def seed(self) -> dict[State, Back]:
        """(0, x, x) for every endpoint of an edge in the starting bag."""
        t_star = start_bag_time(self.g)
        if t_star is None:
            return {}
        starts = sorted({x for e in self.g.edges if e.first <= t_star for x in (e.u, e.v)})
        return {(0, x, x): (None, None) for x in starts}

    def run(self) -> Optional[State]:
        g = self.g
        self.layers = [self.seed()]
        if g.m == 0:
            return None

        entering: dict[int, int] = {}
        for i, e in enumerate(g.edges):
            entering[e.first] = entering.get(e.first, 0) | (1 << i)

        bag_mask = 0
        for t in g.event_times():
            prev = self.layers[-1]
            # edges whose last time is before t leave the bag here
            leaving = 0
            rest = bag_mask
            while rest:
                low = rest & -rest
                idx = low.bit_length() - 1
                if g.edges[idx].last < t:
                    leaving |= low
                rest ^= low
            bag_mask = (bag_mask & ~leaving) | entering.get(t, 0)

            active = g.active_edges_at(t)
            layer: dict[State, Back] = {}
            transitions = 0
            for state in sorted(prev):
                flags, start, head = state
                if flags & leaving != leaving:
                    continue
                base = flags & ~leaving
                for idx in active:
                    e = g.edges[idx]
                    if head not in (e.u, e.v) or base >> idx & 1:
                        continue
                    transitions += 1
                    layer.setdefault((base | (1 << idx), start, e.other(head)), (state, TimeEdge(idx, t)))
                transitions += 1
                layer.setdefault((base, start, head), (state, None))

            self.layers.append(layer)
            self.times.append(t)
            self.bag_masks.append(bag_mask)
            self.stats.append(
                LayerStats(
                    time=t,
                    bag_size=bin(bag_mask).count("1"),
                    states=len(layer),
                    end_vertices=len({s[2] for s in layer}),
                    transitions=transitions,
                )
            )
            if not layer:
                logger.debug("Layer at t=%d is empty; no circuit", t)
                return None

        final = self.layers[-1]
        accepting = sorted(s for s in final if s[0] == bag_mask and s[1] == s[2])
        self._accepting = accepting[0] if accepting else None
        return self._accepting

    def walk_to(self, layer_index: int, state: State) -> TemporalWalk:
        """Reconstruct the walk witnessing ``state`` in ``layers[layer_index]``."""
        steps: list[TimeEdge] = []
        current: Optional[State] = state
        for j in range(layer_index, 0, -1):
            assert current is not None
            pred, step = self.layers[j][current]
            if step is not None:
                steps.append(step)
            current = pred
        assert current is not None
        return TemporalWalk(start=current[1], steps=tuple(reversed(steps)))

    def circuit(self) -> Optional[TemporalWalk]:
        if self._accepting is None:
            return None
        return self.walk_to(len(self.layers) - 1, self._accepting)


def solve_temp_euler(g: TemporalGraph) -> EulerResult:
    """Decide temporal Eulerianity; the circuit is returned when one exists."""
    width = imw(g)
    dp = TemporalEulerDP(g)
    if g.m == 0:
        # nothing to traverse: the empty walk is the circuit
        return EulerResult(circuit=TemporalWalk(start=0), width=0)
    dp.run()
    circuit = dp.circuit()
    logger.debug(
        "Euler DP: m=%d imw=%d layers=%d peak=%d eulerian=%s",
        g.m, width, len(dp.stats), max((s.states for s in dp.stats), default=0), circuit is not None,
    )
    return EulerResult(circuit=circuit, stats=dp.stats, width=width)


def is_temporally_eulerian(g: TemporalGraph) -> bool:
    return solve_temp_euler(g).eulerian
