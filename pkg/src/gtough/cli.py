"""Command-line front end.

Subcommands: ``analyze`` (one graph, full record), ``scan`` (corpus checks
with a deterministic JSON report), ``selftest`` (fixtures plus oracle
parity), ``generate`` (emit enumeration corpora as graph6), and ``bench``
(kernel comparison).  Exit codes: 0 all checks passed, 2 counterexample
found, 1 operational error.  Thresholds are exact "p/q" text; wall-clock
timing goes to stderr so artifacts stay machine-independent.
"""
from __future__ import annotations

import argparse
import json
import sys
from time import perf_counter

from . import __version__
from .bench import run_bench
from .common import as_fraction, fraction_str
from .generators import (
    enumerate_connected,
    enumerate_graphs,
    enumerate_trees,
    half_tough_family,
)
from .graphs import Graph6ParseError, iter_graph6_lines, parse_graph6, write_graph6
from .scan import (
    CHECK_TOKENS,
    FILTER_TOKENS,
    ScanConfig,
    StrictScanError,
    analyze_graph,
    scan_lines,
)
from .selftest import run_selftest

GENERATE_KINDS = ("connected", "graphs", "trees", "half-tough")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gtough",
        description="Exact toughness computation and structural checks for small graphs.",
    )
    parser.add_argument("--version", action="version", version=f"gtough {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze a single graph6 graph")
    p.add_argument("graph6", nargs="?", help="graph6 text (or use --file)")
    p.add_argument("--file", help="read the first graph6 line from this file")
    p.add_argument("--t", required=True, help='threshold as "p/q"')
    p.add_argument("--check", action="append", choices=CHECK_TOKENS,
                   help="check to run (repeatable; default: all)")
    p.add_argument("--exhaustive-cuts", action="store_true",
                   help="audit all minimum certificates and deep clause parts")

    p = sub.add_parser("scan", help="scan a graph6 corpus")
    p.add_argument("input", help='graph6 file path, or "-" for stdin')
    p.add_argument("--t", required=True, help='threshold as "p/q"')
    p.add_argument("--filter", action="append", choices=FILTER_TOKENS,
                   help="keep only matching graphs (repeatable)")
    p.add_argument("--check", action="append", choices=CHECK_TOKENS,
                   help="check to run (repeatable; default: all)")
    p.add_argument("--workers", type=int, default=1, help="worker processes")
    p.add_argument("--verbose", action="store_true",
                   help="include passing records in the report")
    p.add_argument("--strict", action="store_true",
                   help="treat malformed input lines as fatal")
    p.add_argument("--report", help="write the JSON report to this path")
    p.add_argument("--exhaustive-cuts", action="store_true",
                   help="audit all minimum certificates and deep clause parts")

    sub.add_parser("selftest", help="run the built-in integrity suite")

    p = sub.add_parser("generate", help="emit enumeration corpora as graph6 lines")
    p.add_argument("kind", choices=GENERATE_KINDS)
    p.add_argument("--n", type=int, help="vertex count (connected/graphs/trees)")
    p.add_argument("--min-n", type=int,
                   help="emit all sizes from this up to --n (default: just --n)")
    p.add_argument("--max-n", type=int, default=8,
                   help="half-tough family size cap (default 8)")

    p = sub.add_parser("bench", help="compare python and compiled kernels")
    p.add_argument("--sizes", default="10,12,14,16",
                   help="comma-separated vertex counts")
    p.add_argument("--trials", type=int, default=3, help="graphs per size")
    return parser


def _checks_summary_text(record: dict) -> str:
    parts = []
    for token, counts in record["checks"].items():
        if counts["failed"]:
            parts.append(f"{token} FAILED({counts['failed']})")
        elif counts["not_evaluable"]:
            parts.append(f"{token} not-evaluable({counts['not_evaluable']})")
        elif counts["applicable"]:
            parts.append(f"{token} ok({counts['held']})")
        else:
            parts.append(f"{token} vacuous")
    return ", ".join(parts)


def _cmd_analyze(args) -> int:
    t = as_fraction(args.t)
    if (args.graph6 is None) == (args.file is None):
        raise ValueError("analyze needs exactly one of: a graph6 argument or --file")
    if args.file is not None:
        with open(args.file, "r", encoding="ascii") as handle:
            pairs = list(iter_graph6_lines(handle))
        if not pairs:
            raise ValueError(f"no graph6 lines in {args.file}")
        text = pairs[0][1]
    else:
        text = args.graph6.strip()
    g = parse_graph6(text)
    checks = tuple(args.check) if args.check else CHECK_TOKENS
    config = ScanConfig(t=t, checks=checks, exhaustive=args.exhaustive_cuts)
    record, counters = analyze_graph(g, text, config)
    out = record.to_dict()
    print(f"graph6: {out['graph6']}")
    print(f"n={out['n']} m={out['m']} kappa={out['kappa']} tau={out['tau']} "
          f"delta={out['delta']}")
    print(f"claw-free: {'yes' if out['claw_free'] else 'no'}   "
          f"minimally {fraction_str(t)}-tough: "
          f"{'yes' if out['minimally_t_tough'] else 'no'}")
    print(f"degree bound: {out['bound']} (ok: {out['bound_ok']})")
    print(f"checks: {_checks_summary_text(out)}")
    payload = {"record": out, "counterexamples": counters}
    print(json.dumps(payload, sort_keys=True, indent=2))
    return 2 if counters else 0


def _cmd_scan(args) -> int:
    t = as_fraction(args.t)
    config = ScanConfig(
        t=t,
        filters=tuple(args.filter) if args.filter else (),
        checks=tuple(args.check) if args.check else CHECK_TOKENS,
        exhaustive=args.exhaustive_cuts,
    )
    started = perf_counter()
    if args.input == "-":
        lines = list(iter_graph6_lines(sys.stdin))
        source = "<stdin>"
    else:
        with open(args.input, "r", encoding="ascii") as handle:
            lines = list(iter_graph6_lines(handle))
        source = args.input
    report = scan_lines(
        lines,
        config,
        source=source,
        workers=max(args.workers, 1),
        strict=args.strict,
        verbose=args.verbose,
    )
    elapsed = perf_counter() - started
    totals = report.totals
    print(f"scanned {totals['lines']} lines: {totals['malformed']} malformed, "
          f"{totals['qualifying']} qualifying")
    for token in report.checks:
        counts = report.check_totals[token]
        print(f"  {token}: applicable={counts['applicable']} held={counts['held']} "
              f"failed={counts['failed']} not_evaluable={counts['not_evaluable']} "
              f"vacuous={counts['vacuous']}")
    print(f"outcome: {report.outcome}")
    if args.report:
        with open(args.report, "w", encoding="ascii") as handle:
            handle.write(report.to_json())
        print(f"report written to {args.report}")
    print(f"scan finished in {elapsed:.1f}s", file=sys.stderr)
    return report.exit_code


def _cmd_generate(args) -> int:
    if args.kind == "half-tough":
        for g in half_tough_family(args.max_n):
            print(write_graph6(g))
        return 0
    if args.n is None:
        raise ValueError(f"generate {args.kind} needs --n")
    low = args.min_n if args.min_n is not None else args.n
    if low > args.n:
        raise ValueError("--min-n must not exceed --n")
    source = {
        "connected": enumerate_connected,
        "graphs": enumerate_graphs,
        "trees": enumerate_trees,
    }[args.kind]
    for n in range(low, args.n + 1):
        for g in source(n):
            print(write_graph6(g))
    return 0


def _cmd_bench(args) -> int:
    sizes = tuple(int(part) for part in args.sizes.split(",") if part.strip())
    if not sizes or args.trials < 1:
        raise ValueError("bench needs at least one size and one trial")
    return run_bench(sizes=sizes, trials=args.trials)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "scan":
            return _cmd_scan(args)
        if args.command == "selftest":
            return run_selftest()
        if args.command == "generate":
            return _cmd_generate(args)
        if args.command == "bench":
            return _cmd_bench(args)
        raise ValueError(f"unknown command {args.command!r}")
    except (ValueError, TypeError, OSError, Graph6ParseError, StrictScanError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
