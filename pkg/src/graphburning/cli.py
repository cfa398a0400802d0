"""Command line interface: burn graphs, build complexes, compute homology.

Graphs are given either as a file in the edge-list text format, as inline
edge-list text, or as a builder expression like `path:5`, `bipartite:2,3`,
`cube`, or `sum:3,path:2` (three detached copies).  Output is plain text by
default or JSON with --format json; vertex labels are 0-based unless
--one-based is passed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .burning import (
    BurningError,
    SizeGuardExceeded,
    burning_map,
    burning_number,
    enumerate_burnings,
    extremal_path_report,
    minimal_b_burned_subgraphs,
    validate_burning,
)
from .complexes import configuration_space
from .graphs import Graph, GraphError, build_named, iterated_sum, parse_graph_text
from .homology import homology, homology_to_record
from .verify import CHECKS, run_checks

SCHEMA = 1


class UsageError(Exception):
    pass


def load_graph(spec: str) -> Graph:
    """File path, builder expression, or inline edge-list text."""
    if os.path.isfile(spec):
        with open(spec) as fh:
            return parse_graph_text(fh.read())
    head = spec.split(":", 1)[0].strip()
    if head == "sum":
        rest = spec.split(":", 1)[1]
        count_text, inner = rest.split(",", 1)
        return iterated_sum(int(count_text), load_graph(inner))
    if head.isalpha() or head == "complete_bipartite":
        parts = spec.split(":", 1)
        params = []
        if len(parts) == 2:
            params = [int(x) for x in parts[1].split(",") if x.strip()]
        try:
            return build_named(head, *params)
        except GraphError as exc:
            raise UsageError(str(exc)) from None
        except TypeError as exc:
            raise UsageError(f"bad parameters for {head!r}: {exc}") from None
    try:
        return parse_graph_text(spec)
    except GraphError as exc:
        raise UsageError(f"cannot read graph {spec!r}: {exc}") from None


def parse_sources(text: str, one_based: bool) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad source sequence {text!r}; expected e.g. 0,3") from None
    if one_based:
        values = tuple(v - 1 for v in values)
    return values


def shift(values, one_based: bool):
    delta = 1 if one_based else 0
    return [v + delta for v in values]


def _emit(args, record: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        record["schema"] = SCHEMA
        print(json.dumps(record, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _burning_record(b, one_based: bool) -> dict:
    rec = b.to_record()
    rec["sources"] = shift(rec["sources"], one_based)
    return rec


# ---------------------------------------------------------------------------
# Subcommands


def cmd_burnings(args) -> int:
    g = load_graph(args.graph)
    burnings = enumerate_burnings(g)
    record = {"vertex_count": g.vertex_count,
              "burnings": [_burning_record(b, args.one_based) for b in burnings]}
    lines = []
    for b in burnings:
        tag = " hom" if burning_map(b).is_homomorphism else ""
        lines.append(f"sources {','.join(map(str, shift(b.sources, args.one_based)))} "
                     f"end_time {b.end_time}{tag}")
    lines.append(f"total {len(burnings)}")
    _emit(args, record, lines)
    return 0


def cmd_burning_number(args) -> int:
    g = load_graph(args.graph)
    number = burning_number(g)
    _emit(args, {"burning_number": number}, [str(number)])
    return 0


def cmd_validate(args) -> int:
    g = load_graph(args.graph)
    sources = parse_sources(args.sources, args.one_based)
    try:
        b = validate_burning(g, sources)
    except BurningError as exc:
        _emit(args, {"valid": False, "reason": str(exc)}, [f"invalid: {exc}"])
        return 1
    rec = _burning_record(b, args.one_based)
    rec["valid"] = True
    lines = [f"valid, end_time {b.end_time}",
             f"lambda {','.join(map(str, b.times))}"]
    if rec["is_homomorphism"]:
        lines.append("burning map is a homomorphism")
    _emit(args, rec, lines)
    return 0


def cmd_complex(args) -> int:
    g = load_graph(args.graph)
    c = configuration_space(g)
    rec = c.to_record()
    rec["facets"] = [shift(f, args.one_based) for f in rec["facets"]]
    rec["dimension"] = c.dimension
    lines = [f"vertices {c.vertex_count} dimension {c.dimension}"]
    lines += ["facet " + ",".join(map(str, f)) for f in rec["facets"]]
    _emit(args, rec, lines)
    return 0


def cmd_homology(args) -> int:
    g = load_graph(args.graph)
    c = configuration_space(g)
    groups = homology(c, reduced=args.reduced, coeff=args.coeff)
    record = {"reduced": args.reduced, "coefficients": args.coeff,
              "groups": homology_to_record(groups, args.coeff)}
    prefix = "H~" if args.reduced else "H"
    lines = [f"{prefix}_{q} = {grp}" for q, grp in enumerate(groups)]
    _emit(args, record, lines)
    return 0


def cmd_minimal_subgraphs(args) -> int:
    g = load_graph(args.graph)
    sources = parse_sources(args.sources, args.one_based)
    try:
        b = validate_burning(g, sources)
    except BurningError as exc:
        raise UsageError(f"not a burning sequence: {exc}") from None
    subgraphs = minimal_b_burned_subgraphs(
        b, max_vertices=args.max_vertices, max_edges=args.max_edges)
    record = {"sources": shift(b.sources, args.one_based),
              "minimal_subgraphs": [
                  {"vertices": shift(h.vertices, args.one_based),
                   "edges": [shift(e, args.one_based) for e in sorted(h.edges)]}
                  for h in subgraphs]}
    lines = []
    for h in subgraphs:
        vs = ",".join(map(str, shift(h.vertices, args.one_based)))
        es = " ".join(f"{e[0]}-{e[1]}"
                      for e in (shift(e, args.one_based) for e in sorted(h.edges)))
        lines.append(f"vertices {vs} edges {es}")
    lines.append(f"total {len(subgraphs)}")
    _emit(args, record, lines)
    return 0


def cmd_witness(args) -> int:
    report = extremal_path_report(args.kind, args.param)
    record = {"kind": report.kind, "param": report.param, "n": report.n,
              "witness": shift(report.witness, args.one_based),
              "end_time": report.burning.end_time}
    lines = [f"n {report.n}",
             f"witness {','.join(map(str, shift(report.witness, args.one_based)))}",
             f"end_time {report.burning.end_time}"]
    _emit(args, record, lines)
    return 0


def cmd_verify(args) -> int:
    report = run_checks(args.checks or None)
    record = report.to_record()
    lines = []
    for c in report.checks:
        lines.append(f"{c.status.upper():4s} {c.check_id}: {c.statement}")
        if c.status != "pass" and not args.quiet:
            lines.append(f"     details: {json.dumps(c.details, sort_keys=True)}")
    lines.append("all checks passed" if report.all_passed
                 else "some checks FAILED")
    _emit(args, record, lines)
    return 0 if report.all_passed else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # The shared flags are accepted before or after the subcommand; SUPPRESS
    # keeps the subparser from clobbering a value given up front.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"),
                        default=argparse.SUPPRESS)
    common.add_argument("--one-based", action="store_true",
                        default=argparse.SUPPRESS,
                        help="read and print vertex labels 1-based")
    parser = argparse.ArgumentParser(
        prog="graphburn", parents=[common],
        description="Graph burnings, configuration complexes, burning homology.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_graph(name, fn, **kwargs):
        p = sub.add_parser(name, parents=[common], **kwargs)
        p.add_argument("graph", help="file, builder expression, or edge-list text")
        p.set_defaults(fn=fn)
        return p

    with_graph("burnings", cmd_burnings, help="list every burning of a graph")
    with_graph("burning-number", cmd_burning_number,
               help="minimum end time over all burnings")
    p = with_graph("validate", cmd_validate,
                   help="check a source sequence and print its time function")
    p.add_argument("sources", help="comma-separated source sequence, e.g. 0,3")
    with_graph("complex", cmd_complex,
               help="facets of the burning configuration space")
    p = with_graph("homology", cmd_homology,
                   help="homology of the burning configuration space")
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--coeff", default="z", metavar="z|q|p:N",
                   help="coefficients: z (integers), q (rationals), p:N (mod N)")
    p = with_graph("minimal-subgraphs", cmd_minimal_subgraphs,
                   help="minimal subgraphs burned compatibly with a burning")
    p.add_argument("sources")
    p.add_argument("--max-vertices", type=int, default=8)
    p.add_argument("--max-edges", type=int, default=14)
    p = sub.add_parser("witness", parents=[common],
                       help="extremal path lengths with witnesses")
    p.add_argument("kind", choices=("max-n-for-T", "max-n-for-T-hom",
                                    "max-n-for-k", "min-n-for-k",
                                    "min-n-for-k-hom"))
    p.add_argument("param", type=int)
    p.set_defaults(fn=cmd_witness)
    p = sub.add_parser("verify", parents=[common],
                       help="run the built-in verification checks")
    p.add_argument("checks", nargs="*",
                   help=f"check ids (default all): {', '.join(CHECKS)}")
    p.add_argument("--quiet", action="store_true",
                   help="omit failure details in text output")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # SUPPRESS defaults in the shared flags: fill the fallbacks here.
    args.format = getattr(args, "format", "text")
    args.one_based = getattr(args, "one_based", False)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    except (GraphError, BurningError, SizeGuardExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
