"""Command-line interface: build, invariant, verify, export.

Exit codes: 0 success, 1 unexpected refutation in ``verify``, 2 bad input
(including ring-spec parse errors), 3 size cap exceeded, 4 unknown
invariant or a claim filter matching nothing.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import claims
from .errors import CapExceeded, PreconditionError, RingSpecError
from .graph import GRAPH_CAP, Graph, build_td, build_td_closed, build_zero_divisor_graph
from .invariants import (InvariantValue, clique_loop_number, clique_number, connected_components, degree_sequence,
                         diameter, domination_number, girth, independence_number)
from .planarity import is_planar
from .ring import parse_ring_spec
from .suite import render_table, summarize

EXIT_OK, EXIT_REFUTED, EXIT_INPUT, EXIT_CAP, EXIT_UNKNOWN = 0, 1, 2, 3, 4

VARIANTS = ("td", "tdbar", "zdg")
FORMATS = ("dot", "json", "table")


@dataclass(frozen=True)
class CliConfig:
    command: str
    spec: str | None = None
    n: int | None = None
    variant: str | None = None
    format: str | None = None
    cap: int = GRAPH_CAP
    filter: str | None = None
    budget: str | None = None

    def render(self) -> str:
        parts = [self.command]
        for key in ("spec", "n", "variant", "format", "cap", "filter", "budget"):
            value = getattr(self, key)
            if value is not None:
                parts.append(f"{key}={value}")
        return " ".join(parts) + " seedless=true"


def build_graph(spec: str, n: int, variant: str, cap: int) -> Graph:
    r = parse_ring_spec(spec)
    if variant == "td":
        return build_td(r, n, cap)
    if variant == "tdbar":
        return build_td_closed(r, n, cap)
    return build_zero_divisor_graph(r, cap)


def render_graph(g: Graph, fmt: str) -> str:
    if fmt == "dot":
        return g.to_dot()
    if fmt == "json":
        return g.to_json()
    return g.to_table()


def _degrees(g: Graph) -> InvariantValue:
    d = degree_sequence(g)
    return InvariantValue("degrees", {"min": d.minimum, "max": d.maximum, "multiset": d.multiset},
                          extra={"per_vertex": {g.label(v): k for v, k in enumerate(d.per_vertex)}})


def _components(g: Graph) -> InvariantValue:
    comps = connected_components(g)
    return InvariantValue("components", len(comps), tuple(tuple(c.vertices) for c in comps),
                          extra={"kinds": [c.describe() for c in comps]})


INVARIANTS = {
    "degrees": _degrees,
    "components": _components,
    "domination": domination_number,
    "clique": clique_number,
    "independence": independence_number,
    "clique-loop": clique_loop_number,
    "diameter": diameter,
    "girth": girth,
    "planar": is_planar,
}


def cmd_build(args) -> int:
    g = build_graph(args.spec, args.n, args.variant, args.cap)
    text = render_graph(g, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_invariant(args) -> int:
    if args.name not in INVARIANTS:
        print(f"unknown invariant {args.name!r}; choose from {', '.join(INVARIANTS)}", file=sys.stderr)
        return EXIT_UNKNOWN
    g = build_graph(args.spec, args.n, args.variant, args.cap)
    result = INVARIANTS[args.name](g)
    out = result.to_json_dict(g)
    if args.no_runtime:
        out.pop("runtime_ms", None)
    print(json.dumps(out, ensure_ascii=True))
    return EXIT_OK


def cmd_verify(args) -> int:
    pattern = args.filter_flag or args.filter or "*"
    if not claims.REGISTRY.matching(pattern):
        print(f"no claim matches {pattern!r}", file=sys.stderr)
        return EXIT_UNKNOWN
    config = CliConfig("verify", cap=args.cap, filter=pattern, budget=args.budget, format=args.format)
    claims.set_vertex_cap(args.cap)
    reports = claims.REGISTRY.run_all(args.budget, pattern)
    counts = summarize(reports)
    if args.format == "table":
        sys.stdout.write(f"# {config.render()}\n")
        sys.stdout.write(render_table(reports))
    else:
        print(json.dumps({"config": config.render()}))
        for r in reports:
            print(r.to_json(runtime=not args.no_runtime))
        print(json.dumps({"summary": counts}))
    return EXIT_REFUTED if counts["refuted-unexpected"] else EXIT_OK


def cmd_export(args) -> int:
    g = build_graph(args.spec, args.n, args.variant, args.cap)
    out = Path(args.dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = f"{args.variant}_{parse_ring_spec(args.spec).render()}_{args.n}".replace("(", "").replace(")", "")
    for fmt in args.formats:
        path = out / f"{stem}.{'txt' if fmt == 'table' else fmt}"
        path.write_text(render_graph(g, fmt))
        print(path)
    return EXIT_OK


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("spec", help='ring, e.g. "Z6", "GF(4)", "Z2xGF(9)"')
    p.add_argument("n", type=int, help="vector length (ignored for zdg)")
    p.add_argument("variant", choices=VARIANTS)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tdgraph", description=__doc__.splitlines()[0])
    parser.add_argument("--cap", type=int, default=GRAPH_CAP, help="vertex cap for built graphs")
    # --cap is also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="emit TD, TDbar or the zero-divisor graph")
    _add_graph_args(p)
    p.add_argument("--format", choices=FORMATS, default="table")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("invariant", parents=[common], help="compute one invariant with its witness")
    _add_graph_args(p)
    p.add_argument("name", help=", ".join(INVARIANTS))
    p.add_argument("--no-runtime", action="store_true", help="omit runtime_ms for byte-stable output")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("verify", parents=[common], help="run registered claims")
    p.add_argument("filter", nargs="?", help="glob over claim ids (default *)")
    p.add_argument("--filter", dest="filter_flag")
    p.add_argument("--budget", choices=("default", "extended"), default="default")
    p.add_argument("--format", choices=("jsonl", "table"), default="jsonl")
    p.add_argument("--no-runtime", action="store_true", help="omit runtime_ms for byte-stable output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", parents=[common], help="write a graph in several formats to a directory")
    _add_graph_args(p)
    p.add_argument("--dir", default=".")
    p.add_argument("--formats", nargs="+", choices=FORMATS, default=["dot", "json"])
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if args.cap < 1:
        parser.error("--cap must be positive")
    try:
        return args.func(args)
    except RingSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        claims.set_vertex_cap(GRAPH_CAP)


if __name__ == "__main__":
    sys.exit(main())
