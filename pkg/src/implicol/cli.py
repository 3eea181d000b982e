"""Command-line front end.

Graphs are read as DIMACS from ``-i PATH`` or standard input.  Vertex ids in
every output (and in ``--pair``) are 0-based, i.e. DIMACS vertex ``m`` is
reported as ``m - 1``.  Exit status: 0 success, 1 refusal or unmet
precondition (and a refuted or incomplete ``verify``), 2 unparsable input.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import TextIO

from .coloring import chromatic_number, count_k_colorings, find_k_coloring
from .critical import criticality_report, g_minus_analysis
from .errors import DimacsParseError, ImplicolError, PreconditionError
from .fixtures import FIGURES, FOUR_PATH, is_verified
from .graph import Graph
from .harness import CHROMATIC_ONLY, RANGE, THEOREM_IDS, SuiteConfig, run_theorem_suite, suite_report
from .io import emit_dimacs, graph_to_json, parse_dimacs, to_dot
from .kempe import connecting_chain_report, kempe_chains
from .polynomial import chromatic_polynomial
from .relations import classify_pair, explicit_graph
from .verdict import CONFIRMED, NOT_APPLICABLE


def _read_graph(args) -> Graph:
    if args.input in (None, "-"):
        return parse_dimacs(sys.stdin)
    with open(args.input, encoding="utf-8") as fh:
        return parse_dimacs(fh)


def _need_k(args) -> int:
    if args.k is None:
        raise PreconditionError(f"'{args.command}' needs -k")
    return args.k


def _dump(obj, out: TextIO) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


def _reject_format(args, allowed: tuple[str, ...]) -> None:
    if args.format not in allowed:
        raise PreconditionError(f"'{args.command}' supports --format {'|'.join(allowed)}, not {args.format}")


def cmd_chromatic(args, out: TextIO) -> None:
    _reject_format(args, ("json", "text"))
    g = _read_graph(args)
    chi = chromatic_number(g)
    poly = chromatic_polynomial(g)
    top = args.k if args.k is not None else max(chi, 1) + 1
    table = [{"k": k, "count": str(poly(k))} for k in range(top + 1)]
    if args.format == "text":
        out.write(f"chromatic number: {chi}\nP(G, k) = {poly}\n")
        for row in table:
            out.write(f"  k={row['k']}: {row['count']}\n")
        return
    _dump({"chi": chi, "polynomial": poly.to_json(), "table": table}, out)


def cmd_relations(args, out: TextIO) -> None:
    g = _read_graph(args)
    k = _need_k(args)
    if args.pair:
        _reject_format(args, ("json", "text"))
        pc = classify_pair(g, k, *args.pair)
        if args.format == "text":
            out.write(f"{pc.pair[0]} {pc.pair[1]}: {pc.status.value}{' (vacuous)' if pc.vacuous else ''}\n")
        else:
            _dump({"k": k, "vacuous": pc.vacuous, "pair": pc.to_json()}, out)
        return
    report = explicit_graph(g, k)
    if args.format == "dot":
        out.write(to_dot(g, report))
    elif args.format == "text":
        if report.vacuous:
            out.write(f"graph is not {k}-colourable; every pair is related vacuously\n")
        for pc in report.classifications:
            out.write(f"{pc.pair[0]} {pc.pair[1]}: {pc.status.value}\n")
    else:
        _dump(report.to_json(), out)


def cmd_explicit(args, out: TextIO) -> None:
    g = _read_graph(args)
    k = _need_k(args)
    report = explicit_graph(g, k)
    closure = report.explicit_graph
    fmt = args.format or "dimacs"
    if fmt == "dimacs":
        out.write(emit_dimacs(closure, [f"explicit graph for k = {k}",
                                        f"{len(report.added_edges())} implicit edges added"]))
    elif fmt == "dot":
        out.write(to_dot(closure, name="explicit"))
    elif fmt == "json":
        _dump({"k": k, "graph": graph_to_json(closure),
               "explicitEdgesAdded": [list(p) for p in report.added_edges()]}, out)
    else:
        out.write(f"added {len(report.added_edges())} edges: {report.added_edges()}\n")


def cmd_kempe(args, out: TextIO) -> None:
    _reject_format(args, ("json", "text"))
    g = _read_graph(args)
    k = args.k if args.k is not None else chromatic_number(g)
    c = find_k_coloring(g, k)
    if c is None:
        raise PreconditionError(f"graph has no {k}-colouring")
    payload: dict = {"coloring": c.to_json()}
    if args.pair:
        payload["pair"] = list(args.pair)
        payload["report"] = connecting_chain_report(g, c, *args.pair).to_json()
    else:
        payload["chains"] = [ch.to_json() for ch in kempe_chains(g, c)]
    if args.format == "text":
        out.write(f"colouring: {dict(sorted(c.colors.items()))}\n")
        if args.pair:
            out.write(f"pair {args.pair[0]} {args.pair[1]}: {payload['report']}\n")
        else:
            for ch in payload["chains"]:
                out.write(f"colours {ch['colors']}: {ch['vertices']}\n")
        return
    _dump(payload, out)


def cmd_critical(args, out: TextIO) -> None:
    _reject_format(args, ("json", "text"))
    g = _read_graph(args)
    if args.pair:
        r = g_minus_analysis(g, *args.pair)
        payload = {"chi": r.chi, "minusChi": r.minus_chi, "implicitIdentity": r.implicit_identity,
                   "minIdentityChains": r.min_identity_chains, "coloringsChecked": r.colorings_checked,
                   "holds": r.holds}
    else:
        payload = criticality_report(g).to_json()
    if args.format == "text":
        for key, value in payload.items():
            out.write(f"{key}: {value}\n")
        return
    _dump(payload, out)


def cmd_verify(args, out: TextIO) -> int:
    _reject_format(args, ("json", "text"))
    cfg = SuiteConfig(max_n=args.max_n, k_policy=args.k_policy, theorems=tuple(args.theorem) or None,
                      time_budget=args.time_budget, max_k=args.max_k)
    verdicts = run_theorem_suite(cfg)
    if args.format == "text":
        for v in verdicts:
            out.write(f"{v.status:>14}  {v.theorem_id:<28} {v.instances_checked} instances\n")
    else:
        _dump(suite_report(verdicts), out)
    return 0 if all(v.status in (CONFIRMED, NOT_APPLICABLE) for v in verdicts) else 1


def cmd_fixtures(args, out: TextIO) -> None:
    catalogue = dict(FIGURES)
    catalogue[FOUR_PATH.name] = FOUR_PATH
    if args.name is not None:
        if args.name not in catalogue:
            raise PreconditionError(f"unknown fixture {args.name!r}; known: {', '.join(catalogue)}")
        chosen = [catalogue[args.name]]
    else:
        chosen = list(FIGURES.values())
    fmt = args.format or "json"
    if fmt == "dimacs":
        if len(chosen) != 1:
            raise PreconditionError("DIMACS holds one graph; pick it with --name")
        f = chosen[0]
        out.write(emit_dimacs(f.graph, [f"fixture {f.name}: k = {f.k}, pair {f.u} {f.v}"]))
    elif fmt == "json":
        _dump([{"name": f.name, "k": f.k, "pair": [f.u, f.v], "verified": is_verified(f.name),
                "note": f.note, "graph": graph_to_json(f.graph), "dimacs": emit_dimacs(f.graph)}
               for f in chosen], out)
    elif fmt == "dot":
        for f in chosen:
            out.write(to_dot(f.graph, explicit_graph(f.graph, f.k), name=f.name.replace("-", "_")))
    else:
        for f in chosen:
            state = "verified" if is_verified(f.name) else "UNVERIFIED"
            out.write(f"{f.name}: n={f.graph.n} m={f.graph.m} k={f.k} pair=({f.u}, {f.v}) {state}\n")


COMMANDS = {
    "chromatic": cmd_chromatic,
    "relations": cmd_relations,
    "explicit": cmd_explicit,
    "kempe": cmd_kempe,
    "critical": cmd_critical,
    "verify": cmd_verify,
    "fixtures": cmd_fixtures,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="implicol", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, formats=("json", "dot", "text"), default="json"):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-i", "--input", help="DIMACS file (default: standard input)")
        p.add_argument("-k", type=int, help="number of colours")
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--pair", nargs=2, type=int, metavar=("U", "V"), help="0-based vertex pair")
        return p

    add("chromatic", "chromatic number and P(G, k) for k = 0..K")
    add("relations", "classify every vertex pair for k colours")
    add("explicit", "the graph plus all its implicit edges", ("dimacs", "json", "dot", "text"), "dimacs")
    add("kempe", "Kempe chains of a found colouring")
    add("critical", "criticality report, or G - xy analysis with --pair")
    p = add("verify", "exhaustive check of every claim on small graphs")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--theorem", action="append", default=[], metavar="ID",
                   help=f"theorem id or group (repeatable); ids: {', '.join(THEOREM_IDS)}")
    p.add_argument("--k-policy", choices=(CHROMATIC_ONLY, RANGE), default=CHROMATIC_ONLY)
    p.add_argument("--max-k", type=int, default=4)
    p.add_argument("--time-budget", type=float, help="seconds before the report is cut short")
    p = add("fixtures", "emit the built-in figure graphs", ("json", "dimacs", "dot", "text"), "json")
    p.add_argument("--name", help="a single fixture (needed for --format dimacs)")
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        status = COMMANDS[args.command](args, out)
    except DimacsParseError as exc:
        print(f"implicol: parse error: {exc}", file=sys.stderr)
        return 2
    except (ImplicolError, ValueError, OSError) as exc:
        print(f"implicol: {exc}", file=sys.stderr)
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
