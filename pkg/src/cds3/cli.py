"""Command-line interface.

Single-graph commands take one graph6 argument or '-' to read graph6 lines
from standard input, and print one JSON object per graph.  `sweep` runs
checks over a source and prints JSON-lines per graph followed by a JSON
summary.  Exit codes: 0 success, 1 check violation or bad input data,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator

from .constructive import (
    CaseGapError,
    ContradictionError,
    PreconditionError,
    build_h_certificate,
    corollary_cds,
    theorem1_edge,
    theorem2_cds,
)
from .graphs import Graph, bit_list
from .harness import (
    ClassSource,
    EnumerateSource,
    Filters,
    LinesSource,
    RandomSource,
    StreamSource,
    SweepSpec,
    histogram_csv,
    random_filtered,
    run_sweep,
)
from .invariants import clique_number, hypothesis_report, min_cds, min_cds_size
from .minors import SEARCH_CAP, h_number, hadwiger_number, verify_h_sequence


def _emit(obj: dict) -> None:
    json.dump(obj, sys.stdout, separators=(", ", ": "))
    sys.stdout.write("\n")


def _input_graphs(arg: str) -> Iterator[Graph]:
    if arg == "-":
        for line in sys.stdin.buffer:
            if line.strip():
                yield Graph.from_graph6(line)
    else:
        yield Graph.from_graph6(arg)


def _cmd_invariants(args) -> int:
    for g in _input_graphs(args.graph):
        rep = hypothesis_report(g).to_json()
        rep["n"] = g.n
        rep["edges"] = g.edge_count()
        rep["omega"] = clique_number(g)
        if g.n <= args.limit:
            rep["h"] = h_number(g, args.limit)[0]
            rep["eta"] = hadwiger_number(g, args.limit)[0]
        _emit(rep)
    return 0


def _cmd_cds(args) -> int:
    for g in _input_graphs(args.graph):
        if args.vertex is not None:
            d, trace = theorem2_cds(g, args.vertex, strict=args.strict)
        else:
            d, trace = corollary_cds(g)
        _emit(
            {
                "D": bit_list(d),
                "trace": trace.label,
                "size": d.bit_count(),
                "witnesses": trace.witnesses,
            }
        )
    return 0


def _cmd_domedge(args) -> int:
    for g in _input_graphs(args.graph):
        (a, b), trace = theorem1_edge(g, args.vertex)
        _emit({"edge": [a, b], "trace": trace.label, "witnesses": trace.witnesses})
    return 0


def _cmd_certify(args) -> int:
    bad = 0
    for g in _input_graphs(args.graph):
        seq = build_h_certificate(g)
        valid = verify_h_sequence(g, seq)
        out = seq.to_json()
        out["valid"] = valid
        out["floor"] = -(-g.n // 4)
        _emit(out)
        bad += not valid
    return 1 if bad else 0


def _cmd_mincds(args) -> int:
    for g in _input_graphs(args.graph):
        d = min_cds(g)
        _emit({"min_cds": bit_list(d), "size": d.bit_count()})
    return 0


def _cmd_hnum(args) -> int:
    for g in _input_graphs(args.graph):
        value, seq = h_number(g, args.limit)
        _emit({"h": value, "witness": seq.to_json()})
    return 0


def _cmd_eta(args) -> int:
    for g in _input_graphs(args.graph):
        value, model = hadwiger_number(g, args.limit)
        _emit({"eta": value, "witness": model.to_json()})
    return 0


def _cmd_gen(args) -> int:
    filters = _filters_from(args)
    graphs, attempts = random_filtered(
        args.n, args.p, args.count, args.seed, filters, args.max_attempts
    )
    for g in graphs:
        sys.stdout.write(g.to_graph6().decode("ascii") + "\n")
    print(f"attempts: {attempts}", file=sys.stderr)
    return 0


def _filters_from(args) -> Filters:
    forbid = ()
    if getattr(args, "forbid_cycles", None):
        forbid = tuple(int(x) for x in args.forbid_cycles.split(","))
    return Filters(
        connected=True if getattr(args, "connected", False) else None,
        alpha_eq=getattr(args, "alpha_eq", None),
        alpha_max=getattr(args, "alpha_max", None),
        claw_free=bool(getattr(args, "claw_free", False)),
        forbid_cycles=forbid,
    )


def _cmd_sweep(args) -> int:
    if args.enumerate is not None:
        source = EnumerateSource(1, args.enumerate)
    elif args.t2_class is not None:
        source = ClassSource(5, args.t2_class, degree_sorted=args.degree_sorted)
    elif args.stream == "-":
        source = LinesSource(tuple(sys.stdin.buffer.readlines()))
    elif args.stream is not None:
        source = StreamSource(args.stream)
    elif args.random is not None:
        n, p, count = args.random.split(",")
        source = RandomSource(int(n), float(p), int(count), args.seed)
    else:
        print("sweep: one of --enumerate/--t2-class/--stream/--random is required", file=sys.stderr)
        return 2
    spec = SweepSpec(
        source=source,
        checks=tuple(args.checks.split(",")),
        filters=_filters_from(args),
        strict=args.strict,
        jobs=args.jobs,
    )
    emit = None
    if not args.summary_only and spec.jobs == 1:

        def emit(g, out):
            _emit(
                {
                    "graph6": g.to_graph6().decode("ascii"),
                    "violations": out.violations,
                    "gaps": [x["reason"] for x in out.gaps],
                    "labels": out.labels,
                }
            )

    report = run_sweep(spec, on_result=emit)
    if args.csv:
        with open(args.csv, "w", encoding="ascii") as fh:
            fh.write(histogram_csv(report))
    _emit({"summary": report.to_json()})
    if args.fail_fast and report.decode_errors:
        return 1
    return 0 if report.ok() else 1


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="cds3",
        description="Exact small-graph toolkit: connected dominating sets, "
        "the sequence invariant h, and Hadwiger numbers.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="print the hypothesis report plus omega/h/eta")
    p.add_argument("graph", help="graph6 string, or - for stdin lines")
    p.add_argument("--limit", type=int, default=SEARCH_CAP, help="h/eta search cap")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("cds", help="small connected dominating set with its case trace")
    p.add_argument("graph")
    p.add_argument("--vertex", type=int, default=None, help="force this vertex into the set")
    p.add_argument("--strict", action="store_true", help="fail on case-analysis gaps")
    p.set_defaults(func=_cmd_cds)

    p = sub.add_parser("domedge", help="dominating edge through a vertex (alpha=2 class)")
    p.add_argument("graph")
    p.add_argument("--vertex", type=int, required=True)
    p.set_defaults(func=_cmd_domedge)

    p = sub.add_parser("certify", help="build and verify a sequence certificate for h")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("mincds", help="exact minimum connected dominating set")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_mincds)

    p = sub.add_parser("hnum", help="exact h with witness")
    p.add_argument("graph")
    p.add_argument("--limit", type=int, default=SEARCH_CAP)
    p.set_defaults(func=_cmd_hnum)

    p = sub.add_parser("eta", help="exact Hadwiger number with witness")
    p.add_argument("graph")
    p.add_argument("--limit", type=int, default=SEARCH_CAP)
    p.set_defaults(func=_cmd_eta)

    p = sub.add_parser("gen", help="emit seeded random graphs passing filters as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-attempts", type=int, default=1_000_000)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--alpha-eq", type=int, default=None)
    p.add_argument("--alpha-max", type=int, default=None)
    p.add_argument("--claw-free", action="store_true")
    p.add_argument("--forbid-cycles", default=None, help="comma-separated cycle lengths")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("sweep", help="run checks over a graph source")
    p.add_argument("--enumerate", type=int, default=None, metavar="N", help="all labeled graphs with n <= N")
    p.add_argument("--t2-class", type=int, default=None, metavar="N", help="hypothesis-class enumeration up to N")
    p.add_argument("--degree-sorted", action="store_true", help="class representatives only")
    p.add_argument("--stream", default=None, help="graph6 file, or - for stdin")
    p.add_argument("--random", default=None, metavar="N,P,COUNT")
    p.add_argument("--checks", required=True, help="comma-separated check names")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--alpha-eq", type=int, default=None)
    p.add_argument("--alpha-max", type=int, default=None)
    p.add_argument("--claw-free", action="store_true")
    p.add_argument("--forbid-cycles", default=None)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--csv", default=None, help="write the trace histogram as CSV here")
    p.add_argument("--fail-fast", action="store_true", help="nonzero exit on decode errors")
    p.add_argument("--summary-only", action="store_true")
    p.set_defaults(func=_cmd_sweep)

    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (PreconditionError, CaseGapError, ContradictionError, ValueError, RuntimeError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
