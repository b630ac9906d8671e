"""``mvc`` command line.

Exit codes: 0 verified / success, 1 counterexample or failed verification,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from .bounds import bounds_report
from .coloring import VertexColoring, is_mvc_coloring, unserved_pair
from .enumeration import CapabilityError, CorpusError
from .extremal import FAMILIES, FamilyError, FamilySpec, construct, f_v, g_v
from .graph import Graph, GraphError, Graph6Error, parse_graph6, write_graph6
from .harness import CLAIMS, run_check
from .parallel import default_jobs
from .solver import mvc_exact

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("mvc")


class UsageError(Exception):
    pass


def _emit(args: argparse.Namespace, payload: dict, rows: list[Sequence[object]]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for row in rows:
            print("\t".join(str(x) for x in row))


def _graph(text: str) -> Graph:
    try:
        return parse_graph6(text)
    except Graph6Error as exc:
        raise UsageError(f"cannot parse graph6 {text!r}: {exc}") from exc


def cmd_compute(args: argparse.Namespace) -> int:
    g = _graph(args.graph6)
    result = mvc_exact(g)
    if not is_mvc_coloring(g, result.witness):
        raise AssertionError("solver witness failed re-verification")
    payload = {"graph6": write_graph6(g), "mvc": result.value, "nodes": result.nodes}
    rows: list[Sequence[object]] = [[result.value]]
    if args.witness:
        payload["witness"] = list(result.witness.colors)
        rows.append([str(result.witness)])
    _emit(args, payload, rows)
    return EXIT_OK


def cmd_verify_coloring(args: argparse.Namespace) -> int:
    g = _graph(args.graph6)
    try:
        f = VertexColoring.parse(args.colors)
        pair = unserved_pair(g, f)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = {"graph6": write_graph6(g), "mvc_coloring": pair is None, "colors": f.num_colors}
    rows: list[Sequence[object]] = [["ok" if pair is None else "unserved", f.num_colors]]
    if pair is not None:
        payload["unserved_pair"] = list(pair)
        rows[0].extend(pair)  # type: ignore[union-attr]
    _emit(args, payload, rows)
    return EXIT_OK if pair is None else EXIT_COUNTEREXAMPLE


def cmd_bounds(args: argparse.Namespace) -> int:
    g = _graph(args.graph6)
    exact = mvc_exact(g).value if g.n <= args.exact_cap else None
    report = bounds_report(g, exact)
    payload = report.to_dict()
    _emit(args, payload, [[k, "" if v is None else v] for k, v in payload.items()])
    return EXIT_OK if report.consistent() else EXIT_COUNTEREXAMPLE


def cmd_construct(args: argparse.Namespace) -> int:
    spec = FamilySpec(args.family, n=args.n, t=args.t, d=args.d, a=args.a, b=args.b, extra=args.extra)
    try:
        g = construct(spec)
    except FamilyError as exc:
        raise UsageError(str(exc)) from exc
    adjacency = [g.neighbors(u) for u in range(g.n)]
    payload = {"family": args.family, "n": g.n, "m": g.m, "graph6": write_graph6(g), "adjacency": adjacency}
    if args.emit == "graph6":
        rows: list[Sequence[object]] = [[write_graph6(g)]]
    else:
        rows = [[f"{u}:", *nbrs] for u, nbrs in enumerate(adjacency)]
    _emit(args, payload, rows)
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    n = args.n
    if n < 3:
        raise UsageError("tables need n >= 3")
    fn = f_v if args.kind == "fv" else g_v
    table = [(k, fn(n, k)) for k in range(3, n + 1)]
    payload = {"kind": args.kind, "n": n, "rows": [{"k": k, args.kind: v} for k, v in table]}
    _emit(args, payload, [[k, "-" if v is None else v] for k, v in table])
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    try:
        report = run_check(args.claim, args.n_max, jobs=args.jobs, corpus=args.corpus)
    except (CapabilityError, CorpusError, OSError) as exc:
        raise UsageError(str(exc)) from exc
    _emit(args, report.to_dict(), report.tsv_rows())
    return EXIT_OK if report.passed else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default=argparse.SUPPRESS)
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="mvc", description="Monochromatic vertex-connection number toolkit.")
    parser.add_argument("--format", choices=("json", "tsv"), default="tsv")
    parser.add_argument("-v", "--verbose", action="store_true", default=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="exact mvc of a graph")
    p.add_argument("--graph6", required=True)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify-coloring", parents=[common], help="check a coloring for the MVC property")
    p.add_argument("--graph6", required=True)
    p.add_argument("--colors", required=True, help="comma-separated color ids in vertex order")
    p.set_defaults(func=cmd_verify_coloring)

    p = sub.add_parser("bounds", parents=[common], help="all bounds for a graph")
    p.add_argument("--graph6", required=True)
    p.add_argument("--exact-cap", type=int, default=12, help="also solve exactly up to this n")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("construct", parents=[common], help="build an extremal family member")
    p.add_argument("--family", required=True, choices=FAMILIES)
    for name in ("n", "t", "a", "b", "d"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--extra", type=int, default=0)
    p.add_argument("--emit", choices=("graph6", "adj"), default="graph6")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("table", parents=[common], help="f_v or g_v table for one n")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--fv", dest="kind", action="store_const", const="fv")
    kind.add_argument("--gv", dest="kind", action="store_const", const="gv")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", parents=[common], help="exhaustively verify a claim")
    p.add_argument("--claim", required=True, choices=CLAIMS)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.add_argument("--corpus", help="graph6 file to scan instead of the built-in enumeration")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, GraphError, CapabilityError) as exc:
        print(f"mvc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
