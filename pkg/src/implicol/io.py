"""DIMACS ``.col`` input/output, DOT export and the JSON graph echo.

DIMACS files number vertices from 1; graphs here number them from 0, and the
conversion happens only in this module.  Emitters write vertex *positions*, so
graphs with arbitrary labels are written as if relabelled ``0..n-1``.
"""
from __future__ import annotations

import io
import json
from collections.abc import Iterable
from typing import TYPE_CHECKING, TextIO

from .errors import DimacsParseError
from .graph import Graph

if TYPE_CHECKING:
    from .relations import RelationReport


def parse_dimacs(text: str | TextIO) -> Graph:
    """Parse a DIMACS ``.col`` graph.

    Accepts ``c`` comment lines, one ``p edge <n> <m>`` header (``p col`` is
    tolerated) and ``e <u> <v>`` lines.  Repeated edges collapse.  The edge
    count in the header is not enforced because duplicated lines are common
    in the wild.
    """
    stream = io.StringIO(text) if isinstance(text, str) else text
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(stream, start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise DimacsParseError(lineno, "duplicate 'p' header")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise DimacsParseError(lineno, f"malformed header {raw.strip()!r}; expected 'p edge <n> <m>'")
            try:
                n, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsParseError(lineno, "header counts must be integers") from None
            if n < 0 or declared < 0:
                raise DimacsParseError(lineno, "header counts must be non-negative")
        elif tag == "e":
            if n is None:
                raise DimacsParseError(lineno, "edge line before 'p edge' header")
            if len(parts) != 3:
                raise DimacsParseError(lineno, f"malformed edge line {raw.strip()!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsParseError(lineno, "edge endpoints must be integers") from None
            for end in (u, v):
                if not 1 <= end <= n:
                    raise DimacsParseError(lineno, f"edge endpoint {end} outside 1..{n}")
            if u == v:
                raise DimacsParseError(lineno, f"self-loop at vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise DimacsParseError(lineno, f"unknown line type {tag!r}")
    if n is None:
        raise DimacsParseError(0, "missing 'p edge <n> <m>' header")
    return Graph(n, edges)


def emit_dimacs(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    edges = g.relabeled().edges()
    lines.append(f"p edge {g.n} {len(edges)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.relabeled().edges()]}


def graph_from_json(data: dict | str) -> Graph:
    if isinstance(data, str):
        data = json.loads(data)
    return Graph(int(data["n"]), [tuple(e) for e in data["edges"]])


def to_dot(g: Graph, report: RelationReport | None = None, name: str = "G") -> str:
    """Graphviz source; with a report, non-drawn implicit edges are dashed and
    implicit identities dotted."""
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in g.vertices)
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    if report is not None:
        for pc in report.classifications:
            u, v = pc.pair
            if pc.status == "non-drawn-implicit-edge":
                lines.append(f"  {u} -- {v} [style=dashed, constraint=false];")
            elif pc.status == "implicit-identity":
                lines.append(f"  {u} -- {v} [style=dotted, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"
