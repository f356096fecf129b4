"""Command-line entry point.

    pflab check EXPR [--method M] [--cross] [--json]
    pflab explain EXPR
    pflab corpus [--config PATH] [--jobs N] [--json DIR] [--jsonl]
    pflab validate-table PATH

Exit codes: 0 success, 2 parse or semantic error, 3 size/enumeration cap
exceeded on ``check``, 4 disagreement between criteria.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .corpus import CorpusConfig, ring_report, run_corpus, write_reports
from .dsl import EvaluationError, ParseError, evaluate
from .errors import AxiomViolation, DiscrepancyError, EnumerationOverflow, PflabError, SizeCapExceeded
from .flatness import METHODS, is_pf
from .ideals import all_ideals, maximal_ideals

EXIT_OK, EXIT_ERROR, EXIT_CAP, EXIT_DISCREPANCY = 0, 2, 3, 4


def _build_parser():
    parser = argparse.ArgumentParser(prog="pflab", description="Decide and cross-check the PF property of finite rings.")
    parser.add_argument("--version", action="version", version=f"pflab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="decide whether every principal ideal is flat")
    check.add_argument("expr")
    check.add_argument("--method", default="condition4", choices=list(METHODS) + ["cross-check"])
    check.add_argument("--cross", action="store_true", help="run every criterion and report agreement")
    check.add_argument("--json", action="store_true", help="print the JSON report")

    explain = sub.add_parser("explain", help="verdict with a readable certificate")
    explain.add_argument("expr")

    corpus = sub.add_parser("corpus", help="cross-validate a generated corpus of rings")
    corpus.add_argument("--config")
    corpus.add_argument("--jobs", type=int, default=1)
    corpus.add_argument("--json", metavar="DIR", help="write reports.jsonl and summary.json here")
    corpus.add_argument("--jsonl", action="store_true", help="stream one JSON report per ring to stdout")

    table = sub.add_parser("validate-table", help="check a JSON ring table against every axiom")
    table.add_argument("path")
    return parser


def _cap_error(exc):
    cause = getattr(exc, "cause", exc)
    return isinstance(cause, (SizeCapExceeded, EnumerationOverflow))


def _cmd_check(args):
    if args.cross or args.json:
        report = ring_report(args.expr)
        if args.json:
            print(json.dumps(report, sort_keys=True, indent=2))
        else:
            pf = report["verdicts"].get("condition4")
            print(f"{report['expr']}: {'PF' if pf else 'not PF'}")
            for method, v in report["verdicts"].items():
                print(f"  {method:24s} {v}")
            for c in report["cross"]["checks"]:
                print(f"  check {c['name']:20s} {'ok' if c['holds'] else 'FAILED'}")
            for s in report["skips"]:
                print(f"  skipped {s}")
        return EXIT_OK if report["cross"]["agreement"] else EXIT_DISCREPANCY
    R = evaluate(args.expr)
    v = is_pf(R, args.method)
    print(f"{R.label}: {'PF' if v.verdict else 'not PF'} ({v.method}, {v.timing * 1000:.1f} ms)")
    if v.agreeing:
        print(f"  agreeing methods: {', '.join(v.agreeing)}")
    if v.certificate is not None:
        print(f"  certificate: {v.certificate.describe(R)}")
    return EXIT_OK


def _cmd_explain(args):
    R = evaluate(args.expr)
    census = R.census
    fmt = lambda xs: "{" + ", ".join(R.format(x) for x in sorted(xs)) + "}"
    print(f"{R.label}  ({R.kind}, {R.size} elements)")
    print(f"  units:        {len(census.units)}")
    print(f"  idempotents:  {fmt(census.idempotents)}")
    print(f"  nilpotents:   {fmt(census.nilpotents)}")
    print(f"  reduced:      {census.is_reduced}")
    try:
        print(f"  ideals:       {len(all_ideals(R))}")
        print(f"  maximal:      {', '.join(m.expr() for m in maximal_ideals(R))}")
    except EnumerationOverflow as exc:
        print(f"  ideals:       {exc}")
    v = is_pf(R)
    if v.verdict:
        print("  verdict: PF. Every s·x = 0 has a witness α ∈ (0:s) with α·x = x.")
        if v.witnesses:
            shown = [(s, x, a) for (s, x), a in sorted(v.witnesses.items()) if s != R.zero and x != R.zero][:8]
            for s, x, a in shown:
                print(f"    s={R.format(s)}, x={R.format(x)}: α={R.format(a)}")
    else:
        print("  verdict: not PF.")
        print(f"  certificate: {v.certificate.describe(R)}")
    return EXIT_OK


def _cmd_corpus(args):
    cfg = CorpusConfig.load(args.config) if args.config else CorpusConfig()

    def stream(report):
        if args.jsonl:
            print(json.dumps(report, sort_keys=True))

    result = run_corpus(cfg, jobs=args.jobs, on_report=stream)
    if args.json:
        write_reports(result, args.json)
    summary = result.summary()
    out = sys.stderr if args.jsonl else sys.stdout
    print(f"rings: {summary['rings']}  PF: {summary['pf_rings']}  skipped: {summary['skips']}  "
          f"discrepancies: {len(summary['discrepancies'])}", file=out)
    for name, c in summary["checks"].items():
        print(f"  {name:22s} {c['holds']}/{c['total']}", file=out)
    for expr, d in result.discrepancies:
        print(f"  DISCREPANCY {expr}: {d}", file=out)
    return result.exit_status


def _cmd_validate_table(args):
    from .rings import load_table_ring

    try:
        R = load_table_ring(args.path)
    except AxiomViolation as exc:
        print(f"invalid: {exc}")
        return EXIT_ERROR
    print(f"ok: commutative ring with unity, {R.size} elements")
    return EXIT_OK


def main(argv=None):
    args = _build_parser().parse_args(argv)
    handler = {
        "check": _cmd_check,
        "explain": _cmd_explain,
        "corpus": _cmd_corpus,
        "validate-table": _cmd_validate_table,
    }[args.command]
    try:
        return handler(args)
    except DiscrepancyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCREPANCY
    except (ParseError, EvaluationError, PflabError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        if args.command == "check" and _cap_error(exc):
            return EXIT_CAP
        return EXIT_ERROR
