# src/star/solver.py

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from src.core.config import settings
from src.core.errors import PreconditionError, ResourceGuardError, TempoError, UnvisitableEdgeError
from src.core.model import StarInstance, Visit
from src.core.verify import verify_star_exploration
from src.euler.dp import EulerResult, solve_temp_euler
from src.euler.winwin import check_gap_parameters, star_gap_bound
from src.star.normalize import normalize_star
from src.star.reduction import circuit_to_exploration, reduce_star_to_euler
from src.width.bags import imw

logger = logging.getLogger(__name__)


@dataclass
class StarResult:
    """
    Outcome of a star exploration decision.

    Attributes:
        exploration: Visits sorted by entering time, or None.
        width: Edge width of the star.
        euler: Result of the dynamic program on the triangle image, if it ran.
        bound: Win-win bound, if evaluated.
        reason: Short tag for how the answer was reached.
    """
    exploration: Optional[list[Visit]]
    width: int = 0
    euler: Optional[EulerResult] = None
    bound: Optional[Fraction] = None
    reason: str = "dp"

    @property
    def explorable(self) -> bool:
        return self.exploration is not None


def solve_star_exp(s: StarInstance) -> StarResult:
    width = imw(s.graph)
    if s.m == 0:
        return StarResult(exploration=[], width=0, reason="empty")
    try:
        ns = normalize_star(s)
    except UnvisitableEdgeError as exc:
        logger.debug("Edge %d cannot be visited", exc.edge)
        return StarResult(exploration=None, width=width, reason="unvisitable-edge")

    image, tmap = reduce_star_to_euler(ns)
    euler = solve_temp_euler(image)
    if euler.circuit is None:
        return StarResult(exploration=None, width=width, euler=euler)

    visits = circuit_to_exploration(tmap, euler.circuit)
    verdict = verify_star_exploration(s, visits)
    if not verdict:
        raise TempoError(f"mapped exploration failed verification: {verdict.reason}", details=verdict.detail)
    return StarResult(exploration=visits, width=width, euler=euler)


def solve_star_winwin(
    s: StarInstance,
    k: Optional[int] = None,
    ell: Optional[int] = None,
    u: Optional[int] = None,
) -> StarResult:
    """Certified no when the width is too large for the gap parameters, else the DP."""
    k, ell, u = check_gap_parameters(s.graph, k=k, ell=ell, u=u)
    bound = star_gap_bound(k, ell, u)
    width = imw(s.graph)
    if width > bound:
        logger.info("Width %d exceeds bound %s; certified not explorable", width, bound)
        return StarResult(exploration=None, width=width, bound=bound, reason="width-bound")
    result = solve_star_exp(s)
    result.bound = bound
    return result


def solve_star_evenly_spaced(s: StarInstance) -> StarResult:
    """Win-win for stars whose consecutive times are all the same distance apart."""
    gaps = {b - a for e in s.graph.edges for a, b in zip(e.times, e.times[1:])}
    if len(gaps) > 1:
        raise PreconditionError(f"star is not evenly spaced: gaps {sorted(gaps)}")
    lam = gaps.pop() if gaps else 1
    return solve_star_winwin(s, ell=lam, u=lam)


def brute_force_star_exp(s: StarInstance, max_edges: Optional[int] = None) -> Optional[list[Visit]]:
    """
    Reference decision over all edge orders. For a fixed order, entering as
    early as possible after the previous exit and leaving at the next time
    is optimal, so each order is checked greedily.
    """
    cap = settings.star_oracle_max_edges if max_edges is None else max_edges
    if s.m > cap:
        raise ResourceGuardError(f"star oracle limited to {cap} edges", limit=cap, actual=s.m)

    used = [False] * s.m
    visits: list[Visit] = []

    def extend(last_exit: int) -> bool:
        if len(visits) == s.m:
            return True
        for j in range(s.m):
            if used[j]:
                continue
            e = s.graph.edges[j]
            enter = e.next_time_after(last_exit)
            if enter is None:
                continue
            exit_ = e.next_time_after(enter)
            if exit_ is None:
                continue
            used[j] = True
            visits.append(Visit(j, enter, exit_))
            if extend(exit_):
                return True
            visits.pop()
            used[j] = False
        return False

    return list(visits) if extend(0) else None
