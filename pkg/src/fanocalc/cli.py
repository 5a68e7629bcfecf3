"""Batch verification driver.

Subcommands:

    fanocalc list                      catalog of scenarios
    fanocalc run <scenario> [...]      run one scenario
    fanocalc report-all [...]          run everything

Exit codes: 0 all pass, 1 verification failure, 2 usage error.  The flag
--strict demotes "partial" (soft-step failures only) to a failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .errors import DomainError
from .scenarios import Context, Report, catalog, load_golden, run_scenario

USAGE_ERROR = 2
VERIFICATION_ERROR = 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanocalc",
        description="exact verification scenarios for the degree-10 threefold toolkit",
    )
    sub = parser.add_subparsers(dest="command")
    sub.add_parser("list", help="print the scenario catalog")

    def common(p: argparse.ArgumentParser):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--samples", type=int, default=20)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--strict", action="store_true", help="treat partial as fail")
        p.add_argument("--golden", default=None, help="path to a golden claim file")

    runp = sub.add_parser("run", help="run one scenario")
    runp.add_argument("scenario")
    runp.add_argument("--input", default=None, help="JSON descriptor file for input-driven scenarios")
    common(runp)

    allp = sub.add_parser("report-all", help="run every scenario")
    allp.add_argument("--parallel", action="store_true", help="run scenarios concurrently")
    common(allp)
    return parser


def _print_report(report: Report, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "json":
        json.dump(report.to_json(), stream, indent=2, default=str)
        stream.write("\n")
        return
    stream.write(f"== {report.scenario} (seed {report.seed}, samples {report.samples}): {report.status}\n")
    for step in report.steps:
        mark = "ok " if step.passed else ("~~ " if step.soft else "FAIL")
        note = f"  [{step.note}]" if step.note else ""
        stream.write(
            f"  {mark} {step.claim}: computed {step.computed!r}, pinned {step.expected!r}{note}\n"
        )


def _status_code(reports: list[Report], strict: bool) -> int:
    bad = any(r.status == "fail" for r in reports)
    partial = any(r.status == "partial" for r in reports)
    if bad or (strict and partial):
        return VERIFICATION_ERROR
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return USAGE_ERROR
    if args.command == "list":
        for name, desc in catalog():
            print(f"{name:24s} {desc}")
        return 0

    golden = load_golden(args.golden)
    if args.command == "run":
        input_data = None
        if args.input:
            with open(args.input, "rb") as handle:
                input_data = json.load(handle)
        ctx = Context(seed=args.seed, samples=args.samples, golden=golden, input_data=input_data)
        try:
            report = run_scenario(args.scenario, ctx)
        except DomainError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return USAGE_ERROR
        _print_report(report, args.format)
        return _status_code([report], args.strict)

    if args.command == "report-all":
        names = [name for name, _ in catalog()]

        def run_one(name: str) -> Report:
            ctx = Context(seed=args.seed, samples=args.samples, golden=golden)
            return run_scenario(name, ctx)

        if args.parallel:
            with ThreadPoolExecutor() as pool:
                reports = list(pool.map(run_one, names))
        else:
            reports = [run_one(name) for name in names]
        reports.sort(key=lambda r: r.scenario)
        for report in reports:
            _print_report(report, args.format)
        summary = {r.scenario: r.status for r in reports}
        if args.format == "text":
            print("== summary:", json.dumps(summary))
        return _status_code(reports, args.strict)

    parser.print_help()
    return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
