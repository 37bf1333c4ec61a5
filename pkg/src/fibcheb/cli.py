"""Command-line interface: connection tables, identity sweeps, integrals.

Exit codes: 0 when no check failed, 1 when any verification failed, 2 for an
invalid invocation.  PaperErratum records (printed form wrong, corrected form
exact) do not affect the exit code; they are findings, not failures.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import integrals, runner
from .connection import Direction, expand
from .hypergeometric import Hyp2F1, eval_2f1
from .report import Status
from .scalars import format_rational, parse_rational
from .sequences import index_prefix


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibcheb",
        description="Exact Fibonacci-Chebyshev connection coefficients and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="emit connection-coefficient tables")
    table.add_argument(
        "--direction",
        required=True,
        choices=[d.value for d in Direction],
    )
    table.add_argument("--jmax", type=int, required=True)
    table.add_argument("--format", dest="output_format", choices=["json", "csv"], default="csv")
    table.add_argument("--cap", type=int, default=runner.DEFAULT_SAFETY_CAP)

    verify = sub.add_parser("verify", help="run verification sweeps")
    verify.add_argument("--suite", choices=["all", *runner.SUITES], default="all")
    verify.add_argument("--jmax", type=int, default=20)
    verify.add_argument("--qmax", type=int, default=5)
    verify.add_argument("--format", dest="output_format", choices=["json", "text"], default="text")
    verify.add_argument("--workers", type=int, default=None)
    verify.add_argument("--cap", type=int, default=runner.DEFAULT_SAFETY_CAP)

    integrate = sub.add_parser("integrate", help="evaluate one weighted integral")
    integrate.add_argument("--kind", required=True, choices=["ft", "fu", "ff1", "ff2"])
    integrate.add_argument("--j", type=int, required=True)
    integrate.add_argument("--k", type=int, required=True)

    evaluate = sub.add_parser(
        "eval",
        help="evaluate one terminating 2F1 series",
        epilog="Parameters are rational strings; write negative fractions attached (--b=-1/2).",
    )
    evaluate.add_argument("--a", required=True)
    evaluate.add_argument("--b", required=True)
    evaluate.add_argument("--c", required=True)
    evaluate.add_argument("--z", required=True)

    return parser


def _cmd_table(args) -> int:
    direction = Direction(args.direction)
    if args.jmax < 0 or args.jmax > args.cap:
        print(f"error: jmax must be in [0, {args.cap}]", file=sys.stderr)
        return 2
    prefix = index_prefix(direction.target_basis)
    rows = []
    for j in range(direction.min_index, args.jmax + 1):
        for term in expand(j, direction).terms:
            rows.append(
                {
                    "j": j,
                    "m": term.m,
                    "target": f"{prefix}_{term.target_index}",
                    "coefficient": format_rational(term.coefficient),
                }
            )
    if args.output_format == "json":
        print(json.dumps(rows, indent=2))
    else:
        out = io.StringIO()
        writer = csv.DictWriter(out, fieldnames=["j", "m", "target", "coefficient"])
        writer.writeheader()
        writer.writerows(rows)
        sys.stdout.write(out.getvalue())
    return 0


def _cmd_verify(args) -> int:
    workers = args.workers if args.workers is not None else runner.default_worker_count()
    config = runner.RunConfig(
        suite=args.suite,
        jmax=args.jmax,
        qmax=args.qmax,
        workers=workers,
        output_format=args.output_format,
        safety_cap=args.cap,
    )
    try:
        config.validate()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    reports = runner.run_sweep(config)
    summary = runner.summarize(config, reports)
    if args.output_format == "json":
        sys.stdout.write(runner.render_json(summary))
    else:
        sys.stdout.write(runner.render_text(summary))
    return 1 if summary["counts"]["Fail"] else 0


def _cmd_integrate(args) -> int:
    j, k = args.j, args.k
    try:
        if args.kind == "ft":
            value, report = integrals.integral_fib_cheb_t(j, k)
        elif args.kind == "fu":
            value, report = integrals.integral_fib_cheb_u(j, k)
        elif args.kind == "ff1":
            value, report = integrals.integral_fib_fib(j, k, integrals.Weight.FIRST_KIND)
        else:
            value, report = integrals.integral_fib_fib(j, k, integrals.Weight.SECOND_KIND)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"oracle: {value.to_text()}")
    printed = next((c for c in report.checks if c.name == "printed-vs-oracle"), None)
    if printed is not None:
        print(f"printed: {printed.lhs.to_text()}")
    elif report.printed_residual is not None:
        offset = value + integrals.PiMultiple(report.printed_residual)
        print(f"printed: {offset.to_text()}")
    else:
        print("printed: unevaluable")
    print(f"status: {report.status.value}")
    if report.note:
        print(f"note: {report.note}")
    return 1 if report.status is Status.FAIL else 0


def _cmd_eval(args) -> int:
    try:
        spec = Hyp2F1(
            parse_rational(args.a),
            parse_rational(args.b),
            parse_rational(args.c),
            parse_rational(args.z),
        )
        value = eval_2f1(spec)
    except (ValueError, ZeroDivisionError) as exc:
        # NonTerminatingError / ZeroDenominatorError are ValueErrors too:
        # all are invalid inputs for an exact evaluation.
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(format_rational(value))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "table":
        return _cmd_table(args)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "integrate":
        return _cmd_integrate(args)
    return _cmd_eval(args)


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
