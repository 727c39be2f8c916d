# src/euler/winwin.py

"""
Win-win bounds for gap-bounded inputs.

A walk can only traverse an edge at one of its at most k times, and
consecutive times are at most u apart, so a circuit has to finish within a
window that shrinks the possible width. When the measured width exceeds the
bound the answer is a certified no; otherwise the width is small and the
dynamic program is cheap.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Optional

from src.core.errors import PreconditionError
from src.core.model import TemporalGraph, gap_profile
from src.euler.dp import EulerResult, solve_temp_euler
from src.width.bags import imw

logger = logging.getLogger(__name__)


def euler_gap_bound(k: int, u: int) -> Fraction:
    """Largest width an Eulerian input with these parameters can have."""
    return Fraction(2 * (k - 1) * u + 1)


def star_gap_bound(k: int, ell: int, u: int) -> Fraction:
    """Largest width an explorable star with these parameters can have."""
    return Fraction(2 * (k - 1) * u + 1, ell + 1)


def check_gap_parameters(
    g: TemporalGraph,
    k: Optional[int] = None,
    ell: Optional[int] = None,
    u: Optional[int] = None,
) -> tuple[int, int, int]:
    """
    Validate explicit parameters against the instance, measuring the missing
    ones. Returns ``(k, ell, u)``; gaps default to 1 when no edge has two times.
    """
    profile = gap_profile(g)
    k = profile.k if k is None else k
    ell = (profile.ell or 1) if ell is None else ell
    u = (profile.u or 1) if u is None else u
    if k < 1 or ell < 1 or u < ell:
        raise PreconditionError(f"invalid gap parameters k={k} ell={ell} u={u}")
    for idx, e in enumerate(g.edges):
        if len(e.times) > k:
            raise PreconditionError(
                f"edge {idx} has {len(e.times)} times, more than k={k}",
                details={"edge": idx},
            )
        for a, b in zip(e.times, e.times[1:]):
            if not ell <= b - a <= u:
                raise PreconditionError(
                    f"edge {idx} has gap {b - a} between {a} and {b}, outside [{ell}, {u}]",
                    details={"edge": idx, "gap": [a, b]},
                )
    return k, ell, u


def solve_temp_euler_winwin(g: TemporalGraph, k: Optional[int] = None, u: Optional[int] = None) -> EulerResult:
    k, _, u = check_gap_parameters(g, k=k, ell=1, u=u)
    bound = euler_gap_bound(k, u)
    width = imw(g)
    if width > bound:
        logger.info("Width %d exceeds bound %s; certified not Eulerian", width, bound)
        return EulerResult(circuit=None, width=width, bound=bound, pruned_by_bound=True)
    result = solve_temp_euler(g)
    result.bound = bound
    return result
