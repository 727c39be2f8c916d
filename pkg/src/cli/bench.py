# src/cli/bench.py

from __future__ import annotations

import csv
import io
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from statistics import mean
from typing import Iterable, Literal, Optional

import orjson
from tqdm import tqdm

from src.core.errors import TempoError
from src.core.instance_io import load_instance
from src.core.model import StarInstance
from src.euler.dp import solve_temp_euler
from src.reach.mrd import MrdInstance, solve_mrd
from src.star.solver import solve_star_exp
from src.width.bags import imw, vimw

logger = logging.getLogger(__name__)

Problem = Literal["euler", "starexp", "mrd"]
CSV_HEADER = "# tempo-bench v1"


@dataclass
class BenchRow:
    """One benchmark measurement; ``wall_us`` is wall-clock microseconds."""

    name: str
    problem: str
    n: int
    m: int
    lifetime: int
    imw: int
    vimw: int
    decision: str
    wall_us: int
    peak_layer: int


def run_one(path: str, problem: Problem = "euler") -> BenchRow:
    name = Path(path).name
    started = time.perf_counter_ns()
    try:
        inst = load_instance(path)
    except TempoError as exc:
        logger.warning("%s: %s", path, exc)
        return BenchRow(name, problem, 0, 0, 0, 0, 0, exc.code.lower(), 0, 0)
    g = inst.graph
    try:
        if problem == "euler":
            res = solve_temp_euler(g)
            decision, peak = ("yes" if res.eulerian else "no"), res.peak_layer
        elif problem == "starexp":
            star_res = solve_star_exp(StarInstance.from_graph(g, inst.params.get("k")))
            decision = "yes" if star_res.explorable else "no"
            peak = star_res.euler.peak_layer if star_res.euler else 0
        else:
            mrd = MrdInstance.of(g, inst.sources, inst.params.get("k", 0), inst.params.get("h", g.n))
            mrd_res = solve_mrd(mrd)
            decision = "yes" if mrd_res.feasible else "no"
            peak = max((s.states for s in mrd_res.stats), default=0)
    except TempoError as exc:
        logger.warning("%s: %s", path, exc)
        decision, peak = exc.code.lower(), 0
    elapsed = (time.perf_counter_ns() - started) // 1000
    return BenchRow(
        name=name,
        problem=problem,
        n=g.n,
        m=g.m,
        lifetime=g.lifetime or 0,
        imw=imw(g),
        vimw=vimw(g),
        decision=decision,
        wall_us=elapsed,
        peak_layer=peak,
    )


def bench(paths: Iterable[str], problem: Problem = "euler", jobs: int = 1, progress: bool = True) -> list[BenchRow]:
    paths = list(paths)
    if jobs <= 1:
        return [run_one(p, problem) for p in tqdm(paths, desc="bench", disable=not progress)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = pool.map(run_one, paths, [problem] * len(paths))
        return list(tqdm(futures, total=len(paths), desc="bench", disable=not progress))


def aggregate(rows: Iterable[BenchRow]) -> list[dict[str, object]]:
    """Mean wall time per (imw, lifetime) group over the rows that reached a decision."""
    groups: dict[tuple[int, int], list[BenchRow]] = {}
    for row in rows:
        if row.decision not in ("yes", "no"):
            continue
        groups.setdefault((row.imw, row.lifetime), []).append(row)
    return [
        {"imw": w, "lifetime": lt, "count": len(rs), "mean_us": round(mean(r.wall_us for r in rs), 1)}
        for (w, lt), rs in sorted(groups.items())
    ]


def lambda_doubling_ratio(rows: Iterable[BenchRow]) -> Optional[float]:
    """
    Mean wall-time ratio between groups of equal width whose lifetimes
    differ by a factor of two; None when no such pair exists.
    """
    groups = {(g["imw"], g["lifetime"]): g["mean_us"] for g in aggregate(rows)}
    ratios = [
        float(groups[(w, 2 * lt)]) / float(t)
        for (w, lt), t in groups.items()
        if (w, 2 * lt) in groups and float(t) > 0
    ]
    return mean(ratios) if ratios else None


def to_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    writer = csv.DictWriter(buf, fieldnames=list(BenchRow.__dataclass_fields__))
    writer.writeheader()
    for row in rows:
        writer.writerow(asdict(row))
    return buf.getvalue()


def to_json(rows: list[BenchRow]) -> bytes:
    return orjson.dumps(
        {"rows": [asdict(r) for r in rows], "groups": aggregate(rows)},
        option=orjson.OPT_INDENT_2,
    )
