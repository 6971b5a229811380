"""Command-line interface: ``flexionlab verify`` / ``flexionlab list-suites``.

Verdicts and serialized JSON are deterministic functions of the
configuration (unit, lengths, samples, seed, retry cap); the worker count
and wall time never leak into reports, so two runs with the same
configuration emit byte-identical JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from .canonical import get_unit
from .engine import PointRecord
from .suites import Config, SuiteReport, list_suites, run_suites, suite_names
from .words import rat_str

__all__ = ["main", "build_parser"]


def _format_word(w) -> str:
    if not w:
        return "()"
    return "".join(f"({rat_str(x.u)};{rat_str(x.v)})" for x in w)


def _format_point(point: PointRecord) -> str:
    lines = [
        f"      word:   {_format_word(point.word)}"
        + (f"  (split at {point.split})" if point.split is not None else ""),
        f"      lhs:    {'-' if point.lhs is None else rat_str(point.lhs)}",
        f"      rhs:    {'-' if point.rhs is None else rat_str(point.rhs)}",
    ]
    if point.detail:
        lines.append(f"      detail: {point.detail}")
    return "\n".join(lines)


def _text_suite_report(rep: SuiteReport, elapsed: float) -> str:
    totals = rep.totals()
    lines = [
        f"suite {rep.suite}  [{rep.anchor}]  {rep.status}"
        f"  ({totals['identities']} identities, {totals['points']} points, {elapsed:.1f}s)"
    ]
    for result in rep.results:
        if result.ok:
            marker = "ok  " if result.expect == "pass" else "ok× "  # expected failure
        else:
            marker = "FAIL"
        lines.append(f"  {marker}  {result.name}")
        if not result.ok:
            lines.append(f"        expected {result.expect}, observed {result.observed}")
            shown = result.report.counterexample
            if shown is None:
                # an unexpected pass (broken negative control) or a
                # skipped-only length: show the first point as context
                shown = result.report.points[0] if result.report.points else None
            if shown is not None:
                lines.append(_format_point(shown))
            skipped = next(
                (p for p in result.report.points if p.status == "skipped"), None
            )
            if skipped is not None and skipped is not shown:
                lines.append("        first skipped point:")
                lines.append(_format_point(skipped))
    return "\n".join(lines)


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        get_unit(args.unit)
    except KeyError as exc:
        args.parser.error(str(exc))
    cfg = Config(
        unit=args.unit,
        max_length=args.max_length,
        samples=args.samples,
        seed=args.seed,
        jobs=args.jobs,
        retry_cap=args.retry_cap,
    )
    started = time.time()
    report = run_suites(args.suite, cfg)
    elapsed = time.time() - started
    if args.report == "json":
        payload = json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n"
    else:
        blocks = [_text_suite_report(s, 0.0) for s in report.suites]
        # per-suite wall time is not tracked when items run in a shared
        # pool; the run total is reported instead (console only)
        blocks.append(f"overall: {report.status}  ({elapsed:.1f}s wall)")
        payload = "\n\n".join(blocks) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 0 if report.status == "pass" else 1


def _cmd_list_suites(args: argparse.Namespace) -> int:
    rows = list_suites()
    if args.report == "json":
        payload = json.dumps(rows, indent=2, sort_keys=True) + "\n"
    else:
        name_w = max(len(r["suite"]) for r in rows)
        anchor_w = max(len(r["anchor"]) for r in rows)
        lines = [
            f"{r['suite']:<{name_w}}  {r['anchor']:<{anchor_w}}"
            f"  {r['identities']:>3d}  {r['description']}"
            for r in rows
        ]
        payload = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 0


COMMANDS = {
    "verify": _cmd_verify,
    "list-suites": _cmd_list_suites,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flexionlab",
        description="Exact-rational verification suites for the flexion-algebra package.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run one or more verification suites")
    verify.add_argument(
        "--suite",
        action="append",
        choices=suite_names(),
        help="suite to run (repeatable); default: all",
    )
    verify.add_argument("--unit", default="polar", help="flexion unit name (default: polar)")
    verify.add_argument("--max-length", type=int, default=4, help="max word length L")
    verify.add_argument("--samples", type=int, default=4, help="sample words per length")
    verify.add_argument("--seed", type=int, default=0, help="base RNG seed")
    verify.add_argument(
        "--jobs", type=int, default=0, help="worker processes (0 = all CPUs, 1 = inline)"
    )
    verify.add_argument(
        "--retry-cap", type=int, default=8, help="resampling attempts on division by zero"
    )
    verify.add_argument("--report", choices=("text", "json"), default="text")
    verify.add_argument("--out", default=None, help="write the report to this path")

    listing = sub.add_parser("list-suites", help="list registered suites with anchors")
    listing.add_argument("--report", choices=("text", "json"), default="text")
    listing.add_argument("--out", default=None, help="write the listing to this path")

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.parser = parser
    if args.command == "verify" and not args.suite:
        args.suite = ["all"]
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
