# src/core/instance_io.py

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Optional

import networkx as nx
import orjson

from src.core.errors import InstanceFormatError, PreconditionError
from src.core.model import TemporalGraph, TimeEdge, TemporalWalk, Visit

logger = logging.getLogger(__name__)

KNOWN_PARAMS = ("k", "h", "ell", "u")


@dataclass
class InstanceFile:
    """
    Everything an instance file can carry.

    Attributes:
        graph: The temporal graph.
        sources: Source vertex ids (``s`` lines), in file order.
        params: Named integer parameters (``param`` lines).
    """
    graph: TemporalGraph
    sources: tuple[int, ...] = ()
    params: dict[str, int] = field(default_factory=dict)


class _VertexResolver:
    """Maps vertex tokens to ids: declared labels, decimal ids, then fresh labels."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.labels: dict[int, str] = {}
        self.by_label: dict[str, int] = {}

    def declare(self, vid: int, label: str, line_no: Optional[int]) -> None:
        if not 0 <= vid < self.n:
            raise InstanceFormatError(f"vertex id {vid} outside 0..{self.n - 1}", line_no)
        if label.isdigit() and int(label) != vid:
            raise InstanceFormatError(f"numeric label '{label}' must equal its vertex id {vid}", line_no)
        if label in self.by_label and self.by_label[label] != vid:
            raise InstanceFormatError(f"label '{label}' declared twice", line_no)
        self.labels[vid] = label
        self.by_label[label] = vid

    def resolve(self, token: str, line_no: Optional[int]) -> int:
        if token in self.by_label:
            return self.by_label[token]
        if token.isdigit():
            vid = int(token)
            if vid >= self.n:
                raise InstanceFormatError(f"vertex id {vid} outside 0..{self.n - 1}", line_no)
            return vid
        free = next((v for v in range(self.n) if v not in self.labels), None)
        if free is None:
            raise InstanceFormatError(f"no vertex id left for label '{token}'", line_no)
        self.declare(free, token, line_no)
        return free

    def table(self) -> Optional[tuple[str, ...]]:
        if not self.labels:
            return None
        return tuple(self.labels.get(v, str(v)) for v in range(self.n))


def _parse_int(token: str, what: str, line_no: Optional[int]) -> int:
    try:
        return int(token)
    except ValueError:
        raise InstanceFormatError(f"{what} '{token}' is not an integer", line_no) from None


def _parse_times(tokens: Iterable[Any], line_no: Optional[int]) -> tuple[int, ...]:
    times: set[int] = set()
    for tok in tokens:
        t = tok if isinstance(tok, int) else _parse_int(str(tok), "time", line_no)
        if t < 1:
            raise InstanceFormatError(f"non-positive time {t}", line_no)
        times.add(t)
    if not times:
        raise InstanceFormatError("edge without times", line_no)
    return tuple(sorted(times))


class _Builder:
    """Accumulates edges with per-line validation."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.resolver = _VertexResolver(n)
        self.edges: list[tuple[int, int, tuple[int, ...]]] = []
        self.pairs: set[tuple[int, int]] = set()
        self.sources: list[int] = []
        self.params: dict[str, int] = {}

    def add_edge(self, u: int, v: int, times: tuple[int, ...], line_no: Optional[int]) -> None:
        if u == v:
            raise InstanceFormatError(f"self-loop at vertex {u}", line_no)
        key = (min(u, v), max(u, v))
        if key in self.pairs:
            raise InstanceFormatError(f"duplicate edge {key[0]}-{key[1]}", line_no)
        self.pairs.add(key)
        self.edges.append((u, v, times))

    def add_source(self, v: int) -> None:
        if v not in self.sources:
            self.sources.append(v)

    def set_param(self, name: str, value: int, line_no: Optional[int]) -> None:
        if name not in KNOWN_PARAMS:
            raise InstanceFormatError(f"unknown parameter '{name}'", line_no)
        if value < 0:
            raise InstanceFormatError(f"parameter {name} must be non-negative", line_no)
        self.params[name] = value

    def finish(self) -> InstanceFile:
        try:
            graph = TemporalGraph.build(self.n, self.edges, self.resolver.table())
        except PreconditionError as exc:
            raise InstanceFormatError(str(exc)) from exc
        return InstanceFile(graph=graph, sources=tuple(self.sources), params=dict(self.params))


def parse_instance_file(text: str) -> InstanceFile:
    """
    Parse the line-oriented text format.

    ``p tgraph <n> <m>`` must come first; ``e <u> <v> <t1> ...`` declares an
    edge, ``s <v>`` a source, ``param <name> <value>`` a parameter and
    ``v <id> <label>`` a vertex label. ``c`` lines and blank lines are ignored.
    """
    builder: Optional[_Builder] = None
    declared_m: Optional[int] = None
    header_line = 0

    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c" or tokens[0].startswith("#"):
            continue
        kind = tokens[0]

        if kind == "p":
            if builder is not None:
                raise InstanceFormatError("duplicate header", line_no)
            if len(tokens) != 4 or tokens[1] != "tgraph":
                raise InstanceFormatError("header must read 'p tgraph <n> <m>'", line_no)
            n = _parse_int(tokens[2], "vertex count", line_no)
            declared_m = _parse_int(tokens[3], "edge count", line_no)
            if n < 0 or declared_m < 0:
                raise InstanceFormatError("header counts must be non-negative", line_no)
            builder = _Builder(n)
            header_line = line_no
            continue

        if builder is None:
            raise InstanceFormatError("missing 'p tgraph' header", line_no)

        if kind == "e":
            if len(tokens) < 4:
                raise InstanceFormatError("edge line needs two endpoints and at least one time", line_no)
            u = builder.resolver.resolve(tokens[1], line_no)
            v = builder.resolver.resolve(tokens[2], line_no)
            builder.add_edge(u, v, _parse_times(tokens[3:], line_no), line_no)
        elif kind == "s":
            if len(tokens) != 2:
                raise InstanceFormatError("source line must read 's <v>'", line_no)
            builder.add_source(builder.resolver.resolve(tokens[1], line_no))
        elif kind == "param":
            if len(tokens) != 3:
                raise InstanceFormatError("parameter line must read 'param <name> <value>'", line_no)
            builder.set_param(tokens[1], _parse_int(tokens[2], "parameter value", line_no), line_no)
        elif kind == "v":
            if len(tokens) != 3:
                raise InstanceFormatError("label line must read 'v <id> <label>'", line_no)
            builder.resolver.declare(_parse_int(tokens[1], "vertex id", line_no), tokens[2], line_no)
        else:
            raise InstanceFormatError(f"unknown line kind '{kind}'", line_no)

    if builder is None:
        raise InstanceFormatError("missing 'p tgraph' header")
    if declared_m != len(builder.edges):
        raise InstanceFormatError(
            f"header declares {declared_m} edges but {len(builder.edges)} were given", header_line
        )
    return builder.finish()


def parse_instance(text: str) -> TemporalGraph:
    return parse_instance_file(text).graph


def parse_instance_json(data: bytes | str) -> InstanceFile:
    """JSON mirror of the text format: ``{"n", "edges", "sources", "params", "labels"}``."""
    try:
        doc = orjson.loads(data)
    except orjson.JSONDecodeError as exc:
        raise InstanceFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "n" not in doc:
        raise InstanceFormatError("JSON instance must be an object with an 'n' field")

    n = doc["n"]
    if not isinstance(n, int) or n < 0:
        raise InstanceFormatError("'n' must be a non-negative integer")
    builder = _Builder(n)
    for vid, label in enumerate(doc.get("labels") or []):
        if label is not None:
            builder.resolver.declare(vid, str(label), None)
    for idx, entry in enumerate(doc.get("edges", [])):
        if not isinstance(entry, list) or len(entry) != 3 or not isinstance(entry[2], list):
            raise InstanceFormatError(f"edge entry {idx} must be [u, v, [times]]")
        u = builder.resolver.resolve(str(entry[0]), None)
        v = builder.resolver.resolve(str(entry[1]), None)
        builder.add_edge(u, v, _parse_times(entry[2], None), None)
    for src in doc.get("sources", []):
        builder.add_source(builder.resolver.resolve(str(src), None))
    for name, value in (doc.get("params") or {}).items():
        if not isinstance(value, int):
            raise InstanceFormatError(f"parameter {name} must be an integer")
        builder.set_param(name, value, None)
    return builder.finish()


def load_instance(path: str | Path) -> InstanceFile:
    """Read an instance from disk; ``.json`` files use the JSON mirror."""
    file_path = Path(path)
    if not file_path.exists() or not file_path.is_file():
        raise InstanceFormatError(f"instance file does not exist: {path}")
    if file_path.suffix.lower() == ".json":
        inst = parse_instance_json(file_path.read_bytes())
    else:
        inst = parse_instance_file(file_path.read_text(encoding="utf-8"))
    logger.debug("Loaded %s: n=%d m=%d", file_path.name, inst.graph.n, inst.graph.m)
    return inst


def serialize_instance(
    g: TemporalGraph,
    sources: Iterable[int] = (),
    params: Optional[dict[str, int]] = None,
    comment: Optional[str] = None,
) -> str:
    lines: list[str] = []
    if comment:
        lines.extend(f"c {row}" for row in comment.splitlines())
    lines.append(f"p tgraph {g.n} {g.m}")
    if g.labels is not None:
        lines.extend(f"v {vid} {label}" for vid, label in enumerate(g.labels))
    for e in g.edges:
        lines.append(f"e {e.u} {e.v} " + " ".join(str(t) for t in e.times))
    lines.extend(f"s {v}" for v in sources)
    for name, value in (params or {}).items():
        lines.append(f"param {name} {value}")
    return "\n".join(lines) + "\n"


def serialize_instance_json(
    g: TemporalGraph,
    sources: Iterable[int] = (),
    params: Optional[dict[str, int]] = None,
) -> bytes:
    doc: dict[str, Any] = {
        "n": g.n,
        "edges": [[e.u, e.v, list(e.times)] for e in g.edges],
        "sources": list(sources),
        "params": dict(params or {}),
    }
    if g.labels is not None:
        doc["labels"] = list(g.labels)
    return orjson.dumps(doc)


def parse_static_graph(text: str) -> nx.Graph:
    """
    Read a plain undirected graph: ``p graph <n> <m>`` followed by
    ``e <u> <v>`` lines over vertex ids 0..n-1.
    """
    graph: Optional[nx.Graph] = None
    declared_m = 0
    header_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c" or tokens[0].startswith("#"):
            continue
        if tokens[0] == "p":
            if graph is not None or len(tokens) != 4 or tokens[1] != "graph":
                raise InstanceFormatError("header must read 'p graph <n> <m>'", line_no)
            graph = nx.Graph()
            graph.add_nodes_from(range(_parse_int(tokens[2], "vertex count", line_no)))
            declared_m = _parse_int(tokens[3], "edge count", line_no)
            header_line = line_no
        elif tokens[0] == "e":
            if graph is None:
                raise InstanceFormatError("missing 'p graph' header", line_no)
            if len(tokens) != 3:
                raise InstanceFormatError("edge line must read 'e <u> <v>'", line_no)
            u = _parse_int(tokens[1], "vertex id", line_no)
            v = _parse_int(tokens[2], "vertex id", line_no)
            if u not in graph or v not in graph:
                raise InstanceFormatError(f"edge {u}-{v} uses an undeclared vertex", line_no)
            if u == v:
                raise InstanceFormatError(f"self-loop at vertex {u}", line_no)
            if graph.has_edge(u, v):
                raise InstanceFormatError(f"duplicate edge {u}-{v}", line_no)
            graph.add_edge(u, v)
        else:
            raise InstanceFormatError(f"unknown line kind '{tokens[0]}'", line_no)
    if graph is None:
        raise InstanceFormatError("missing 'p graph' header")
    if graph.number_of_edges() != declared_m:
        raise InstanceFormatError(
            f"header declares {declared_m} edges but {graph.number_of_edges()} were given", header_line
        )
    return graph


def serialize_static_graph(graph: nx.Graph) -> str:
    nodes = sorted(graph.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    lines = [f"p graph {len(nodes)} {graph.number_of_edges()}"]
    for u, v in sorted((min(index[a], index[b]), max(index[a], index[b])) for a, b in graph.edges):
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Witness formatting
# ---------------------------------------------------------------------------

def _edge_name(g: TemporalGraph, edge: int) -> str:
    e = g.edges[edge]
    return f"{g.label(e.u)}-{g.label(e.v)}"


def format_circuit(g: TemporalGraph, walk: TemporalWalk) -> str:
    """One ``(u-v, t)`` pair per step, oriented along the walk."""
    parts: list[str] = []
    head = walk.start
    for step in walk.steps:
        nxt = g.edges[step.edge].other(head)
        parts.append(f"({g.label(head)}-{g.label(nxt)}, {step.time})")
        head = nxt
    return " ".join(parts)


def format_exploration(g: TemporalGraph, visits: Iterable[Visit]) -> str:
    return "\n".join(
        f"visit {_edge_name(g, v.edge)} {v.enter} {v.exit}" for v in sorted(visits, key=lambda x: x.enter)
    )


def format_deletions(g: TemporalGraph, deletions: Iterable[TimeEdge]) -> str:
    return "\n".join(f"delete {_edge_name(g, d.edge)} {d.time}" for d in sorted(deletions, key=lambda x: (x.time, x.edge)))
