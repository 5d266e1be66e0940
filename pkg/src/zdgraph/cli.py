"""Command line entry point.

Commands:

  analyze        full JSON report for one ring (flags, graph stats,
                 polynomial-extension completeness)
  graph          deterministic DOT export of one graph variant
  check          run harness checks over a ring family, write a JSON report
  poly-complete  completeness predicate plus witness search for one ring

Exit codes: 0 success, 1 check disagreement, 2 usage or construction error,
3 trivial-graph request (the ring has no nonzero zero divisors).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .exprs import ExprSemanticsError, ExprSyntaxError
from .graphs import GRAPH_KINDS, TrivialGraphError, build_graph
from .hamiltonian import DEFAULT_NODE_BUDGET, find_hamiltonian_cycle
from .harness import ALL_CHECK_IDS, CheckOptions, FamilySpec, run_family, summarize
from .polynomials import find_nonadjacent_zero_divisors, poly_graph_is_complete
from .rings import DEFAULT_ORDER_CAP, OrderCapError, make_ring

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_USAGE = 2
EXIT_TRIVIAL = 3


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _emit_json(obj, path: str | None) -> None:
    _emit(json.dumps(obj, sort_keys=True, indent=2) + "\n", path)


def _diameter_json(value):
    return "inf" if value == math.inf else value


def analysis_report(ring, *, oracle_budget: int = DEFAULT_NODE_BUDGET) -> dict:
    graphs = []
    if ring.nonzero_zero_divisors:
        for kind in GRAPH_KINDS:
            g = build_graph(ring, kind)
            if len(g) < 3:
                status = "too-small"
            else:
                status = find_hamiltonian_cycle(g, oracle_budget).status
            graphs.append(
                {
                    "kind": kind,
                    "vertex_count": len(g),
                    "edge_count": g.edge_count(),
                    "complete": g.is_complete(),
                    "diameter": _diameter_json(g.diameter()),
                    "hypertriangulated": g.is_hypertriangulated(),
                    "universal_vertex_count": len(g.universal_vertices()),
                    "hamiltonian": status,
                }
            )
    return {
        "schema": 1,
        "ring": ring.expr(),
        "order": ring.order,
        "nonzero_zero_divisor_count": len(ring.nonzero_zero_divisors),
        "flags": {
            "boolean": ring.is_boolean,
            "reduced": ring.is_reduced,
            "local": len(ring.local_decomposition()) == 1,
            "indecomposable": ring.is_indecomposable,
            "zero_divisors_form_ideal": ring.zero_divisors_form_ideal,
            "embeds_in_two_integral_domains": ring.embeds_in_two_integral_domains,
        },
        "graphs": graphs,
        "polynomial_extension_complete": poly_graph_is_complete(ring),
    }


def _cmd_analyze(args) -> int:
    ring = make_ring(args.expr, max_order=args.max_order)
    _emit_json(analysis_report(ring, oracle_budget=args.budget), args.output)
    return EXIT_OK


def _cmd_graph(args) -> int:
    ring = make_ring(args.expr, max_order=args.max_order)
    try:
        graph = build_graph(ring, args.kind)
    except TrivialGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TRIVIAL
    _emit(graph.to_dot(color_by_cause=args.color), args.output)
    return EXIT_OK


def _cmd_check(args) -> int:
    if args.theorems == "all":
        check_ids = ALL_CHECK_IDS
    else:
        check_ids = tuple(t.strip() for t in args.theorems.split(",") if t.strip())
        unknown = [c for c in check_ids if c not in ALL_CHECK_IDS]
        if unknown:
            print(
                f"error: unknown check ids {unknown}; known: {list(ALL_CHECK_IDS)}",
                file=sys.stderr,
            )
            return EXIT_USAGE
    spec = FamilySpec(
        family=args.family,
        lo=args.min,
        hi=args.max,
        seeds=tuple(s.strip() for s in args.seeds.split(",") if s.strip()),
        max_order=args.max_order,
        modulus=args.modulus,
        max_degree=args.max_degree,
        max_n=args.max_n,
        exclude_fields=args.exclude_fields,
    )
    options = CheckOptions(oracle_budget=args.budget, seed=args.seed)
    reports = run_family(spec, check_ids, options=options, jobs=args.jobs)
    summary = summarize(reports)
    _emit_json(
        {"schema": 1, "summary": summary, "reports": [r.to_json() for r in reports]},
        args.output,
    )
    for bad in summary["disagreements"]:
        print(f"DISAGREE {bad['theorem']} on {bad['ring']}: {bad}", file=sys.stderr)
    counts = {k: v for k, v in sorted(summary["checks"].items())}
    print(
        f"checked {summary['total']} reports over {len(spec.expressions())} rings: "
        + ("ok" if summary["ok"] else f"{len(summary['disagreements'])} disagreement(s)"),
        file=sys.stderr,
    )
    for cid, bucket in counts.items():
        print(f"  {cid}: {bucket}", file=sys.stderr)
    return EXIT_OK if summary["ok"] else EXIT_DISAGREE


def _cmd_poly_complete(args) -> int:
    ring = make_ring(args.expr, max_order=args.max_order)
    predicate = poly_graph_is_complete(ring)
    search = find_nonadjacent_zero_divisors(
        ring, args.degree_bound, budget=args.budget, seed=args.seed
    )
    witness = None
    if search.pair is not None:
        witness = {"p": str(search.pair[0]), "q": str(search.pair[1])}
    _emit_json(
        {
            "schema": 1,
            "ring": ring.expr(),
            "degree_bound": args.degree_bound,
            "predicate_complete": predicate,
            "witness": witness,
            "exhaustive": search.exhaustive,
        },
        args.output,
    )
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zdgraph",
        description="Finite commutative rings and their zero-divisor graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--max-order", type=int, default=DEFAULT_ORDER_CAP,
                       help="construction cap on the ring order")

    p = sub.add_parser("analyze", help="full JSON report for one ring")
    p.add_argument("expr", help='ring expression, e.g. "Z12" or "Z2 x Z4"')
    p.add_argument("-o", "--output", default=None, help="write JSON here (default stdout)")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET,
                   help="node budget for the Hamiltonian search")
    common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("graph", help="export one graph variant as DOT")
    p.add_argument("expr")
    p.add_argument("--kind", choices=GRAPH_KINDS, default="tilde")
    p.add_argument("--color", action="store_true", help="color edges by adjacency cause")
    p.add_argument("-o", "--output", default=None, help="write DOT here (default stdout)")
    common(p)
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("check", help="run harness checks over a ring family")
    p.add_argument("--family", choices=("zn", "products", "quotients", "idealizations"),
                   default="zn")
    p.add_argument("--min", type=int, default=2, help="zn family: smallest modulus")
    p.add_argument("--max", type=int, default=50, help="zn family: largest modulus")
    p.add_argument("--seeds", default="", help="products family: comma-separated ring expressions")
    p.add_argument("--modulus", type=int, default=2, help="quotients family: base modulus")
    p.add_argument("--max-degree", type=int, default=2, help="quotients family: largest degree")
    p.add_argument("--max-n", type=int, default=12, help="idealizations family: largest base modulus")
    p.add_argument("--exclude-fields", action="store_true")
    p.add_argument("--theorems", default="all",
                   help=f"comma-separated check ids or 'all'; known: {', '.join(ALL_CHECK_IDS)}")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1, help="parallel workers (results stay ordered)")
    p.add_argument("-o", "--output", default=None, help="write the JSON report here")
    common(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("poly-complete",
                       help="polynomial-extension completeness predicate plus witness search")
    p.add_argument("expr")
    p.add_argument("--degree-bound", type=int, default=1)
    p.add_argument("--budget", type=int, default=200_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None)
    common(p)
    p.set_defaults(func=_cmd_poly_complete)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ExprSyntaxError, ExprSemanticsError, OrderCapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
