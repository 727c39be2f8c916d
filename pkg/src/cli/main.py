# src/cli/main.py

"""
Command-line entry point: ``python -m src.cli <command> ...``.

Exit codes: 0 yes / success, 1 certified no, 2 input error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

import orjson
from pydantic import ValidationError

from src.core.config import settings
from src.core.errors import InstanceFormatError, PreconditionError, ReductionError, ResourceGuardError, TempoError
from src.core.instance_io import (
    InstanceFile,
    format_circuit,
    format_deletions,
    format_exploration,
    load_instance,
    parse_static_graph,
    serialize_instance,
    serialize_instance_json,
)
from src.core.model import StarInstance, TemporalGraph
from src.cli import bench as bench_mod
from src.cli.generators import GenSpec, generate
from src.euler.dp import solve_temp_euler
from src.euler.oracle import brute_force_temp_euler
from src.euler.winwin import solve_temp_euler_winwin
from src.reach.mrd import MrdInstance, brute_force_mrd, solve_mrd
from src.reductions.clique import reduce_clique_to_mrd
from src.reductions.coloring import reduce_3col_to_starexp
from src.reductions.doublestar import reduce_starexp_to_doublestar
from src.star.normalize import normalize_star
from src.star.reduction import reduce_star_to_euler
from src.star.solver import brute_force_star_exp, solve_star_evenly_spaced, solve_star_exp, solve_star_winwin
from src.utils.cli_ui import banner, configure_logging, print_error, print_table, print_verdict
from src.width.bags import edge_bag_sequence, vertex_bag_sequence

logger = logging.getLogger(__name__)

EXIT_YES = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_GUARD = 3

INSTANCE_SUFFIXES = (".tg", ".txt", ".json")


def emit(text: str | bytes) -> None:
    """Raw machine-readable output, never wrapped or styled."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(doc: dict[str, Any]) -> None:
    emit(orjson.dumps(doc, option=orjson.OPT_INDENT_2))


def _emit_csv_row(row: dict[str, Any]) -> None:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(row), lineterminator="\n")
    writer.writeheader()
    writer.writerow({key: "" if value is None else value for key, value in row.items()})
    emit(buf.getvalue())


def _load(path: str) -> InstanceFile:
    inst = load_instance(path)
    lifetime = inst.graph.lifetime or 0
    if lifetime > settings.lifetime_warning:
        logger.warning("Lifetime %d is above %d; bag materialization scales with it", lifetime, settings.lifetime_warning)
    return inst


def _decision(args: argparse.Namespace, question: str, answer: bool, payload: dict[str, Any], witness: str, note: str = "") -> int:
    if args.format == "json":
        _emit_json({question: answer, **payload})
    elif args.format == "csv":
        _emit_csv_row({question: "yes" if answer else "no", **payload})
    else:
        print_verdict(question, answer, note)
        if answer and args.witness and witness:
            emit(witness)
    return EXIT_YES if answer else EXIT_NO


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_width(args: argparse.Namespace) -> int:
    g = _load(args.file).graph
    seq = vertex_bag_sequence(g) if args.vertex else edge_bag_sequence(g)
    kind = "vimw" if args.vertex else "imw"
    changes = seq.sizes_changes()
    if args.format == "json":
        _emit_json({kind: seq.width, "lifetime": seq.lifetime, "changes": changes})
    elif args.format == "csv":
        _emit_csv_row({kind: seq.width, "lifetime": seq.lifetime, "changes": " ".join(f"{t}:{size}" for t, size in changes)})
    else:
        emit(f"{kind} {seq.width}")
        emit(f"lifetime {seq.lifetime}")
        for t, size in changes:
            emit(f"{t} {size}")
    return EXIT_YES


def cmd_euler(args: argparse.Namespace) -> int:
    g = _load(args.file).graph
    if args.oracle:
        walk = brute_force_temp_euler(g)
        witness = format_circuit(g, walk) if walk else ""
        return _decision(args, "eulerian", walk is not None, {"circuit": witness or None}, witness, "oracle")

    res = solve_temp_euler_winwin(g, k=args.k, u=args.u) if args.winwin else solve_temp_euler(g)
    witness = format_circuit(g, res.circuit) if res.circuit else ""
    if args.stats and args.format == "text":
        print_table(
            "layers",
            ["time", "bag", "states", "ends", "transitions"],
            [(s.time, s.bag_size, s.states, s.end_vertices, s.transitions) for s in res.stats],
        )
    payload = {
        "imw": res.width,
        "bound": str(res.bound) if res.bound is not None else None,
        "pruned_by_bound": res.pruned_by_bound,
        "peak_layer": res.peak_layer,
        "circuit": witness or None,
    }
    note = "width bound" if res.pruned_by_bound else ""
    return _decision(args, "eulerian", res.eulerian, payload, witness, note)


def cmd_starexp(args: argparse.Namespace) -> int:
    inst = _load(args.file)
    star = StarInstance.from_graph(inst.graph, args.k if args.k is not None else inst.params.get("k"))
    if args.oracle:
        visits = brute_force_star_exp(star)
        witness = format_exploration(star.graph, visits) if visits is not None else ""
        return _decision(args, "explorable", visits is not None, {"exploration": witness or None}, witness, "oracle")

    if args.evenly:
        res = solve_star_evenly_spaced(star)
    elif args.winwin:
        res = solve_star_winwin(
            star,
            ell=args.ell if args.ell is not None else inst.params.get("ell"),
            u=args.u if args.u is not None else inst.params.get("u"),
        )
    else:
        res = solve_star_exp(star)
    witness = format_exploration(star.graph, res.exploration) if res.exploration else ""
    payload = {
        "imw": res.width,
        "bound": str(res.bound) if res.bound is not None else None,
        "reason": res.reason,
        "exploration": witness or None,
    }
    note = res.reason if res.reason != "dp" else ""
    return _decision(args, "explorable", res.explorable, payload, witness, note)


def cmd_mrd(args: argparse.Namespace) -> int:
    inst = _load(args.file)
    k = args.k if args.k is not None else inst.params.get("k")
    h = args.h if args.h is not None else inst.params.get("h")
    if k is None or h is None:
        raise PreconditionError("k and h are required (flags or 'param' lines)")
    mrd = MrdInstance.of(inst.graph, inst.sources, k, h)

    if args.oracle:
        deletions = brute_force_mrd(mrd)
        witness = format_deletions(inst.graph, deletions) if deletions else ""
        return _decision(args, "feasible", deletions is not None, {"deletions": witness or None}, witness, "oracle")

    res = solve_mrd(mrd, prune=not args.no_prune, max_vimw=args.max_vimw)
    witness = format_deletions(inst.graph, res.deletions) if res.deletions else ""
    payload = {
        "vimw": res.width,
        "cost": res.cost,
        "reach": len(res.reach) if res.reach is not None else None,
        "deletions": witness or None,
    }
    note = f"{res.cost} deletion(s)" if res.feasible else ""
    return _decision(args, "feasible", res.feasible, payload, witness, note)


def _write_instance(args: argparse.Namespace, g: TemporalGraph, sources=(), params=None, comment=None) -> None:
    if args.format == "json":
        body: str | bytes = serialize_instance_json(g, sources, params)
    else:
        body = serialize_instance(g, sources, params, comment)
    if args.output:
        mode = "wb" if isinstance(body, bytes) else "w"
        with open(args.output, mode) as fh:
            fh.write(body)
        logger.info("Wrote %s (n=%d m=%d)", args.output, g.n, g.m)
    else:
        emit(body)


def cmd_reduce(args: argparse.Namespace) -> int:
    source_text = Path(args.input).read_text(encoding="utf-8")
    if args.kind == "3col-star":
        star, cert = reduce_3col_to_starexp(parse_static_graph(source_text))
        _write_instance(args, star.graph, params={"k": star.k}, comment=f"3-coloring image, n={cert.n}")
    elif args.kind == "clique-mrd":
        if args.r is None:
            raise ReductionError("clique-mrd needs -r")
        mrd, _ = reduce_clique_to_mrd(parse_static_graph(source_text), args.r)
        _write_instance(args, mrd.graph, sources=sorted(mrd.sources), params={"k": mrd.k, "h": mrd.h},
                        comment=f"clique image, r={args.r}")
    else:
        inst = _load(args.input)
        star = StarInstance.from_graph(inst.graph, inst.params.get("k"))
        if args.kind == "star-euler":
            image, _ = reduce_star_to_euler(normalize_star(star))
            _write_instance(args, image, comment="triangle image")
        else:
            image, cert = reduce_starexp_to_doublestar(star)
            _write_instance(args, image, comment=f"double star, {len(cert.dummies)} dummy leaves")
    return EXIT_YES


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        spec = GenSpec(
            family=args.family, seed=args.seed, n=args.n, m=args.m, k=args.k,
            lifetime=args.lifetime, ell=args.ell, u=args.u,
        )
    except ValidationError as exc:
        raise PreconditionError(f"invalid generator parameters: {exc.errors()[0]['msg']}") from exc
    g = generate(spec)
    params = {"k": spec.k} if spec.family in ("random-star", "gap-bounded-star") else None
    _write_instance(args, g, params=params, comment=f"{spec.family} seed={spec.seed}")
    return EXIT_YES


def cmd_bench(args: argparse.Namespace) -> int:
    paths: list[str] = []
    for arg in args.paths:
        root = Path(arg)
        if root.is_dir():
            paths.extend(str(p) for p in sorted(root.iterdir()) if p.suffix in INSTANCE_SUFFIXES)
        else:
            paths.append(str(root))
    rows = bench_mod.bench(paths, problem=args.problem, jobs=args.jobs, progress=args.format == "text")
    if args.format == "csv":
        emit(bench_mod.to_csv(rows))
    elif args.format == "json":
        emit(bench_mod.to_json(rows))
    else:
        banner("tempo bench")
        print_table(
            "runs",
            ["name", "problem", "n", "m", "lifetime", "imw", "vimw", "decision", "wall_us", "peak_layer"],
            [tuple(vars(r).values()) for r in rows],
        )
        groups = bench_mod.aggregate(rows)
        print_table("by width and lifetime", ["imw", "lifetime", "count", "mean_us"],
                    [tuple(g.values()) for g in groups])
        ratio = bench_mod.lambda_doubling_ratio(rows)
        if ratio is not None:
            emit(f"lifetime doubling ratio {ratio:.2f}")
            if ratio > 4:
                logger.warning("Doubling the lifetime scaled wall time by %.2f, more than 4", ratio)
    return EXIT_YES


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tempo", description="Temporal graph width toolkit")
    parser.add_argument("--log-level", default=None, help=f"logging level (default {settings.log_level})")
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("width", help="interval-membership width and bag size changes")
    p.add_argument("file")
    p.add_argument("--vertex", action="store_true", help="vertex bags instead of edge bags")
    p.set_defaults(func=cmd_width)

    p = sub.add_parser("euler", help="decide temporal Eulerianity")
    p.add_argument("file")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--winwin", action="store_true", help="apply the gap-bound test first")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--u", type=int, default=None)
    p.add_argument("--oracle", action="store_true", help="use the exhaustive reference solver")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("starexp", help="decide star exploration")
    p.add_argument("file")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--winwin", action="store_true")
    p.add_argument("--evenly", action="store_true", help="evenly spaced variant")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--u", type=int, default=None)
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_starexp)

    p = sub.add_parser("mrd", help="minimize reachability by deleting time-edges")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--h", type=int, default=None)
    p.add_argument("--witness", action="store_true")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--max-vimw", type=int, default=None)
    p.set_defaults(func=cmd_mrd)

    p = sub.add_parser("reduce", help="emit a reduction image")
    p.add_argument("kind", choices=("3col-star", "star-euler", "star-doublestar", "clique-mrd"))
    p.add_argument("input")
    p.add_argument("-r", type=int, default=None, help="clique size for clique-mrd")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="generate a seeded random instance")
    p.add_argument("--family", default="random-temporal",
                   choices=("random-temporal", "random-star", "gap-bounded-star", "euler-image"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-n", type=int, default=6)
    p.add_argument("-m", type=int, default=None)
    p.add_argument("-k", type=int, default=3)
    p.add_argument("--lifetime", type=int, default=20)
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--u", type=int, default=3)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time a solver over instance files")
    p.add_argument("paths", nargs="+")
    p.add_argument("--problem", choices=("euler", "starexp", "mrd"), default="euler")
    p.add_argument("--jobs", type=int, default=settings.bench_default_jobs)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)

    handler: Callable[[argparse.Namespace], int] = args.func
    try:
        return handler(args)
    except ResourceGuardError as exc:
        _report(args, exc)
        return EXIT_GUARD
    except (InstanceFormatError, PreconditionError, ReductionError) as exc:
        _report(args, exc)
        return EXIT_INPUT
    except TempoError as exc:
        logger.exception("Unexpected failure")
        _report(args, exc)
        return EXIT_INPUT
    except OSError as exc:
        _report(args, TempoError(str(exc)))
        return EXIT_INPUT


def _report(args: argparse.Namespace, exc: TempoError) -> None:
    if args.format == "json":
        _emit_json({"ok": False, "error": exc.to_payload()})
    else:
        print_error(str(exc), exc.code)
