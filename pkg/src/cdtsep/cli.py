"""Command-line frontend.

Verbs: catalog, analyze, orient, separator, verify, export.
Exit codes: 0 verified/ok, 1 mismatch, 2 input error.
"""

from __future__ import annotations

import argparse
import sys

from .catalog import CdtName, build_cdt, cdt_parameters
from .cycles import enumerate_girth_cycles, fastening_profile
from .dot import emit_dot
from .graph6 import Graph6Error, parse_graph6
from .graphs import (
    GraphError,
    distances,
    girth,
    is_bipartite,
    is_hamiltonian,
    is_planar,
)
from .groups import arc_transitivity
from .orient import OddWitness, build_constraints, classify_kappa, solve
from .separator import alternate_census, build_separator, separator_summary
from .report import (
    ReportInputError,
    run_graph_report,
    run_ingest_report,
    run_report,
    report_to_json,
    VerificationReport,
    SCHEMA_VERSION,
)


class _InputError(Exception):
    pass


def _resolve(spec: str):
    """Catalog name or literal graph6 text -> (name | None, graph, label table | None)."""
    try:
        name = CdtName.from_string(spec)
    except ValueError:
        name = None
    if name is not None:
        g, table = build_cdt(name)
        return name, g, table
    try:
        return None, parse_graph6(spec), None
    except Graph6Error as exc:
        raise _InputError(f"{spec!r} is neither a catalog name nor valid graph6: {exc}")


def _pipeline(g, name):
    """Shared front of the analyze/orient/separator verbs."""
    if name is not None:
        k = cdt_parameters(name).k
    else:
        if not (g.is_cubic() and g.is_connected()):
            raise _InputError("input graph must be cubic and connected")
        k = arc_transitivity(g)
        if k < 2:
            raise _InputError("input graph is not 2-arc-transitive")
    cs = enumerate_girth_cycles(g)
    return k, cs


def _cmd_catalog(args) -> int:
    print(f"{'name':14} {'n':>4} {'d':>2} {'g':>2} {'k':>2} {'eta':>4} {'aut':>5} "
          f"{'b':>2} {'h':>2} {'kappa':>5}")
    for name in CdtName:
        p = cdt_parameters(name)
        print(f"{name.value:14} {p.n:>4} {p.d:>2} {p.g:>2} {p.k:>2} {p.eta:>4} "
              f"{p.a:>5} {p.b:>2} {p.h:>2} {p.kappa:>5}")
    return 0


def _cmd_analyze(args) -> int:
    name, g, _table = _resolve(args.graph)
    k, cs = _pipeline(g, name)
    table = distances(g)
    print(f"order {g.order}  diameter {table.diameter}  girth {girth(g)}  "
          f"bipartite {int(is_bipartite(g))}  planar {int(is_planar(g))}")
    print(f"arc-transitivity {k}")
    print(f"girth cycles {len(cs)}")
    profile = fastening_profile(g, cs, k)
    print(f"fastening uniform {profile.uniform}")
    for i in sorted(profile.levels):
        counts = dict(sorted(profile.levels[i].items()))
        print(f"  paths of length {k - 1 - i}: cycles-through counts {counts}")
    ham = is_hamiltonian(g, budget=args.budget if args.budget else 60.0)
    print(f"hamiltonian {'unknown (budget)' if ham is None else ham}")
    return 0


def _cmd_orient(args) -> int:
    name, g, _table = _resolve(args.graph)
    k, cs = _pipeline(g, name)
    try:
        outcome = solve(build_constraints(g, cs, k))
    except GraphError as exc:
        raise _InputError(str(exc))
    if isinstance(outcome, OddWitness):
        print("orientation: unsolvable")
        print(f"odd witness through {len(outcome.paths)} paths:")
        for cid, p, parity in zip(outcome.cycle_ids, outcome.paths, outcome.parities):
            print(f"  cycle {cid} -> path {p} ({'odd' if parity else 'even'})")
        print(f"  back to cycle {outcome.cycle_ids[-1]}")
        print(f"kappa {classify_kappa(False, is_planar(g), cs.girth, k)}")
        return 0
    signs = "".join("-" if f else "+" for f in outcome.flips)
    print("orientation: solvable")
    print(f"components {outcome.components}")
    print(f"assignment {signs}")
    print(f"kappa {classify_kappa(True, is_planar(g), cs.girth, k)}")
    return 0


def _cmd_separator(args) -> int:
    name, g, _table = _resolve(args.graph)
    k, cs = _pipeline(g, name)
    outcome = solve(build_constraints(g, cs, k))
    if isinstance(outcome, OddWitness):
        raise _InputError("no separator: the orientation constraints are unsolvable")
    s = build_separator(g, cs, k, outcome)
    census = alternate_census(s, max_r=4)
    summary = separator_summary(s, census)
    print(f"vertices {summary.vertices}")
    print(f"cycle arcs {summary.cycle_arcs}  transposition edges "
          f"{summary.transposition_edges}  underlying edges {summary.underlying_edges}")
    print(f"oriented cycles {summary.oriented_cycles}")
    for r in sorted(summary.alternate_simple):
        lengths = sorted(summary.alternate_lengths[r])
        print(f"{r}-alternate simple cycles {summary.alternate_simple[r]} "
              f"(lengths {lengths})")
    return 0


def _cmd_verify(args) -> int:
    budget = args.budget
    if args.all:
        report = run_report(budget=budget)
    else:
        if not args.graph:
            raise _InputError("verify needs a graph name or --all")
        name, g, _table = _resolve(args.graph)
        if name is None:
            graph_report = run_ingest_report(g, budget=budget)
        else:
            graph_report = run_graph_report(name, budget=budget)
        report = VerificationReport(SCHEMA_VERSION, (graph_report,))
    if args.json:
        print(report_to_json(report))
    else:
        for r in report.reports:
            print(f"== {r.graph}")
            for c in r.checks:
                line = f"  [{c.status}] {c.name}"
                if c.expected is not None or c.actual is not None:
                    line += f": expected {c.expected}, actual {c.actual}"
                if c.note:
                    line += f"  ({c.note})"
                print(line)
    return report.exit_code()


def _cmd_export(args) -> int:
    name, g, table = _resolve(args.graph)
    if args.dot:
        k, cs = _pipeline(g, name)
        outcome = solve(build_constraints(g, cs, k))
        if isinstance(outcome, OddWitness):
            raise _InputError("no separator to export: orientation unsolvable")
        s = build_separator(g, cs, k, outcome)
        text = emit_dot(s, table, name=name.value if name else "separator")
        with open(args.dot, "w") as f:
            f.write(text)
        print(f"wrote {args.dot}")
        return 0
    if args.json_path:
        if name is None:
            report = VerificationReport(
                SCHEMA_VERSION, (run_ingest_report(g, budget=args.budget),)
            )
        else:
            report = VerificationReport(
                SCHEMA_VERSION, (run_graph_report(name, budget=args.budget),)
            )
        with open(args.json_path, "w") as f:
            f.write(report_to_json(report) + "\n")
        print(f"wrote {args.json_path}")
        return report.exit_code()
    raise _InputError("export needs --dot PATH or --json PATH")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdtsep",
        description="Construct, orient and separate the cubic"
        " distance-transitive graphs, and verify their structure.",
    )
    parser.add_argument(
        "--budget",
        type=float,
        default=None,
        metavar="SECONDS",
        help="time budget gating hamiltonicity and group searches",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    sub.add_parser("catalog", help="list the twelve catalog rows")

    for verb, fn in [("analyze", None), ("orient", None), ("separator", None)]:
        sp = sub.add_parser(verb)
        sp.add_argument("graph", help="catalog name or graph6 text")

    sp = sub.add_parser("verify", help="run the verification pipeline")
    sp.add_argument("graph", nargs="?", help="catalog name or graph6 text")
    sp.add_argument("--all", action="store_true", help="verify all twelve graphs")
    sp.add_argument("--json", action="store_true", help="emit the JSON report")

    sp = sub.add_parser("export", help="write DOT or JSON artifacts")
    sp.add_argument("graph", help="catalog name or graph6 text")
    sp.add_argument("--dot", metavar="PATH", help="write the separator as DOT")
    sp.add_argument("--json", dest="json_path", metavar="PATH",
                    help="write the verification report as JSON")
    return parser


_DISPATCH = {
    "catalog": _cmd_catalog,
    "analyze": _cmd_analyze,
    "orient": _cmd_orient,
    "separator": _cmd_separator,
    "verify": _cmd_verify,
    "export": _cmd_export,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.verb](args)
    except (_InputError, ReportInputError, Graph6Error, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
