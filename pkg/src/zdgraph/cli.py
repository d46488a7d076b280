"""Command-line surface.

Subcommands: graph (full zero-divisor graph), compress (compressed graph),
iso (isomorphism query), verify (cross-validation sweeps), conjecture
(harness scans). Exit codes: 0/1 carry boolean query results, 2 grammar or
usage errors, 3 isomorphism budget exhaustion, 4 verification failure.
All output is byte-deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .arithmetic import factor_integer, factor_polynomial
from .compressed_graph import graph_from_factorization, to_dot, to_json
from .conjectures import (
    DEFAULT_BUDGET,
    check_conjecture1,
    check_conjecture2,
    check_conjecture3,
    check_conjecture4,
    default_instances,
    parse_instance_line,
    report_to_json,
)
from .finite_ring import (
    GrammarError,
    IntegersMod,
    PolyQuotient,
    RingTooLarge,
    full_zero_divisor_graph,
    oracle_compressed_graph,
    parse_ring_spec,
)
from .isomorphism import SearchBudgetExceeded, graphs_isomorphic
from .sweeps import blowup_sweep, gcd_theorem_sweep, oracle_equivalence_sweep


def compressed_for(spec, loops: bool):
    """Basis construction where a factorization exists, oracle otherwise."""
    if isinstance(spec, IntegersMod):
        return graph_from_factorization(factor_integer(spec.n), loops)
    if isinstance(spec, PolyQuotient):
        return graph_from_factorization(factor_polynomial(spec.modulus, spec.p), loops)
    return oracle_compressed_graph(spec, loops=loops)


def _print_compressed_table(g, out) -> None:
    for v in g.vertices:
        parts = [f"vertex {v.label}"]
        if v.size is not None:
            parts.append(f"size {v.size}")
        if v.loop:
            parts.append("loop")
        print("  ".join(parts), file=out)
    for i, j in g.edges:
        print(f"edge {g.vertices[i].label} -- {g.vertices[j].label}", file=out)


def _print_graph_table(g, out) -> None:
    for s in g.labels:
        print(f"vertex {s}", file=out)
    for i, j in g.edges:
        print(f"edge {g.labels[i]} -- {g.labels[j]}", file=out)


def _cmd_graph(args, out) -> int:
    g = full_zero_divisor_graph(parse_ring_spec(args.ring))
    if args.format == "json":
        out.write(g.to_json())
    elif args.format == "dot":
        out.write(g.to_dot())
    else:
        _print_graph_table(g, out)
    return 0


def _cmd_compress(args, out) -> int:
    g = compressed_for(parse_ring_spec(args.ring), args.loops)
    if args.format == "json":
        out.write(to_json(g))
    elif args.format == "dot":
        out.write(to_dot(g))
    else:
        _print_compressed_table(g, out)
    return 0


def _cmd_iso(args, out) -> int:
    g1 = compressed_for(parse_ring_spec(args.ring1), args.loops)
    g2 = compressed_for(parse_ring_spec(args.ring2), args.loops)
    report = graphs_isomorphic(g1, g2, respect_loops=args.loops, budget=args.budget)
    if args.format == "json":
        payload = {
            "isomorphic": report.isomorphic,
            "witness": [list(p) for p in report.witness] if report.witness else None,
            "separating": report.separating,
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        if report.isomorphic:
            print("isomorphic", file=out)
            for a, b in report.witness:
                print(f"  {a} -> {b}", file=out)
        else:
            print("not isomorphic", file=out)
            print(f"separating: {report.separating}", file=out)
    return 0 if report.isomorphic else 1


def _cmd_verify(args, out) -> int:
    jobs = [
        ("oracle-equivalence", lambda: oracle_equivalence_sweep(max_n=args.max_n)),
        ("gcd-theorem", lambda: gcd_theorem_sweep(max_n=args.max_n)),
        ("blow-up", lambda: blowup_sweep(max_n=args.max_n)),
    ]
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            outcomes = list(pool.map(lambda item: item[1](), jobs))
    else:
        outcomes = [fn() for _, fn in jobs]
    print(f"{'sweep':<20}{'checked':>10}{'failures':>10}  status", file=out)
    failed = False
    for (name, _), outcome in zip(jobs, outcomes):
        status = "pass" if outcome.ok else "FAIL"
        failed = failed or not outcome.ok
        print(f"{name:<20}{outcome.checked:>10}{len(outcome.failures):>10}  {status}", file=out)
    if failed:
        for (name, _), outcome in zip(jobs, outcomes):
            for failure in outcome.failures[:5]:
                print(f"failure[{name}]: {failure}", file=out)
        return 4
    return 0


def _load_instances(conjecture: int, path: str):
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    out = []
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            out.append(parse_instance_line(conjecture, stripped))
        except (ValueError, GrammarError) as exc:
            raise GrammarError(f"{path}:{lineno}: {exc}") from exc
    return out


def _cmd_conjecture(args, out) -> int:
    if args.instances:
        instances = _load_instances(args.number, args.instances)
    else:
        instances = default_instances(args.number, args.max_n)
    checkers = {
        1: lambda inst: check_conjecture1(*inst, budget=args.budget),
        2: lambda inst: check_conjecture2(*inst),
        3: lambda inst: check_conjecture3(*inst),
        4: lambda inst: check_conjecture4(*inst, budget=args.budget),
    }
    check = checkers[args.number]
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(check, instances))
    else:
        reports = [check(inst) for inst in instances]
    for report in reports:
        print(f"{report.verdict:<16}{report.instance}", file=out)
    counts = {verdict: 0 for verdict in ("supported", "counterexample", "skipped")}
    for report in reports:
        counts[report.verdict] += 1
    print(
        f"checked {len(reports)}: {counts['supported']} supported, "
        f"{counts['counterexample']} counterexample, {counts['skipped']} skipped",
        file=out,
    )
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            for report in reports:
                fh.write(report_to_json(report) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zdgraph",
        description="Compressed zero-divisor graphs of quotient rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="full zero-divisor graph of a finite ring")
    p.add_argument("ring", help='ring spec, e.g. "Z/12" or "F2[x]/(x^3)"')
    p.add_argument("--format", choices=("table", "json", "dot"), default="table")
    p.set_defaults(fn=_cmd_graph)

    p = sub.add_parser("compress", help="compressed zero-divisor graph")
    p.add_argument("ring")
    p.add_argument("--loops", action="store_true", help="admit self-loops")
    p.add_argument("--format", choices=("table", "json", "dot"), default="table")
    p.set_defaults(fn=_cmd_compress)

    p = sub.add_parser("iso", help="compressed-graph isomorphism query")
    p.add_argument("ring1")
    p.add_argument("ring2")
    p.add_argument("--loops", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(fn=_cmd_iso)

    p = sub.add_parser("verify", help="run the cross-validation sweeps")
    p.add_argument("--max-n", type=int, default=2000, dest="max_n")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("conjecture", help="scan a conjecture over instances")
    p.add_argument("number", type=int, choices=(1, 2, 3, 4))
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    p.add_argument("--instances", help="file with one instance per line")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", help="write JSON-lines reports to this path")
    p.set_defaults(fn=_cmd_conjecture)

    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args, out)
    except (GrammarError, RingTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
