"""Deterministic sweep runner behind the ``verify`` command.

Tasks are pure and independent, so they may be fanned out over a process
pool; results are merged and sorted by identity and parameters, which makes
the emitted report byte-identical regardless of worker count.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import connection, identities, integrals
from .report import Check, Report, Status, make_report

DEFAULT_SAFETY_CAP = 500
TRIG_ABS_TOL = 1e-9
TRIG_SAMPLE_COUNT = 16

SUITES = (
    "cor51",
    "cor52",
    "complex",
    "chain",
    "laurent",
    "trig",
    "fib2f1",
    "lemma",
    "connection",
    "integrals",
)

LAURENT_POINTS = (Fraction(1), Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(7, 5))


@dataclass(frozen=True)
class RunConfig:
    suite: str = "all"
    jmax: int = 20
    qmax: int = 5
    workers: int = 1
    output_format: str = "text"
    safety_cap: int = DEFAULT_SAFETY_CAP

    def validate(self) -> None:
        if self.suite != "all" and self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}")
        if self.jmax < 0 or self.qmax < 0:
            raise ValueError("ranges must be nonnegative")
        if self.jmax > self.safety_cap:
            raise ValueError(f"jmax {self.jmax} exceeds safety cap {self.safety_cap}")
        if self.workers < 1:
            raise ValueError("worker count must be positive")
        if self.output_format not in ("text", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")


def default_worker_count() -> int:
    env = os.environ.get("FIBCHEB_WORKERS", "")
    if env.strip():
        return max(1, int(env))
    return 1


# ---------------------------------------------------------------------------
# Task construction and execution.  A task is a plain picklable tuple
# (family, *args); execution dispatches on the family name.
# ---------------------------------------------------------------------------

Task = tuple


def build_tasks(config: RunConfig) -> list[Task]:
    suites = SUITES if config.suite == "all" else (config.suite,)
    tasks: list[Task] = []
    jmax, qmax = config.jmax, config.qmax
    for suite in suites:
        if suite == "cor51":
            tasks += [("cor51-T", j) for j in range(1, jmax + 1)]
            tasks += [("cor51-U", j) for j in range(1, jmax + 1)]
            tasks += [("cor51-fib", j) for j in range(jmax + 1)]
        elif suite == "cor52":
            tasks += [
                ("cor52", j, q) for j in range(jmax + 1) for q in range(1, qmax + 1)
            ]
        elif suite == "complex":
            tasks += [("complex", n) for n in range(jmax + 1)]
        elif suite == "chain":
            tasks += [("chain", j) for j in range(jmax + 1)]
        elif suite == "laurent":
            tasks += [
                ("laurent", j, str(x0)) for j in range(jmax + 1) for x0 in LAURENT_POINTS
            ]
        elif suite == "trig":
            tasks += [("trig", j) for j in range(jmax + 1)]
        elif suite == "fib2f1":
            tasks += [("fib2f1", n) for n in range(1, jmax + 1)]
        elif suite == "lemma":
            tasks += [
                ("lemma", j, m) for j in range(2, jmax + 1) for m in range(1, j // 2 + 1)
            ]
        elif suite == "connection":
            for direction in connection.Direction:
                lo = direction.min_index
                tasks += [("connection", j, direction.value) for j in range(lo, jmax + 1)]
        elif suite == "integrals":
            for j in range(jmax + 1):
                for k in range(j + 1):
                    tasks.append(("int-FT", j, k))
                    tasks.append(("int-FU", j, k))
                    tasks.append(("int-FF1", j, k))
                    tasks.append(("int-FF2", j, k))
    return tasks


def _run_trig(j: int) -> Report:
    thetas = [math.pi * (t + 1) / TRIG_SAMPLE_COUNT for t in range(TRIG_SAMPLE_COUNT)]
    worst = max(identities.verify_trig_identity(j, theta) for theta in thetas)
    status = Status.PASS if worst < TRIG_ABS_TOL else Status.FAIL
    return Report(
        identity="trig",
        params=(("j", j),),
        status=status,
        lhs=worst,
        rhs=0.0,
        residual=worst,
        note=f"max |lhs-rhs| over {TRIG_SAMPLE_COUNT} angles (tolerance {TRIG_ABS_TOL})",
    )


def _run_connection(j: int, direction_value: str) -> Report:
    direction = connection.Direction(direction_value)
    expansion = connection.expand(j, direction)
    source = expansion.source_polynomial()
    rebuilt = expansion.reconstruct()
    checks = [Check("round-trip", rebuilt, source)]

    oracle = dict(connection.oracle_expand(source, direction.target_basis))
    generated = expansion.coefficients_by_index()
    agree = all(
        oracle.get(idx, Fraction(0)) == generated.get(idx, Fraction(0))
        for idx in set(oracle) | set(generated)
    )
    checks.append(Check("oracle-match", agree, True))

    if direction in (connection.Direction.F_IN_T, connection.Direction.F_IN_U):
        positive = all(t.coefficient > 0 for t in expansion.terms)
        checks.append(Check("coefficients-positive", positive, True))

    return make_report("connection", {"j": j, "direction": direction.value}, checks)


def execute_task(task: Task) -> Report:
    family, *args = task
    if family == "cor51-T":
        return identities.verify_cor_sum_T(args[0])
    if family == "cor51-U":
        return identities.verify_cor_sum_U(args[0])
    if family == "cor51-fib":
        return identities.verify_fib_expressions(args[0])
    if family == "cor52":
        return identities.verify_derivative_corollaries(args[0], args[1])
    if family == "complex":
        return identities.verify_complex_identities(args[0])
    if family == "chain":
        return identities.verify_2f1_chain(args[0])
    if family == "laurent":
        return identities.verify_laurent_identity(args[0], Fraction(args[1]))
    if family == "trig":
        return _run_trig(args[0])
    if family == "fib2f1":
        return identities.verify_fib_2f1_representations(args[0])
    if family == "lemma":
        holds = connection.lemma_recurrence_holds(args[0], args[1])
        return make_report("lemma", {"j": args[0], "m": args[1]}, [Check("recurrence", holds, True)])
    if family == "connection":
        return _run_connection(args[0], args[1])
    if family == "int-FT":
        return integrals.integral_fib_cheb_t(args[0], args[1])[1]
    if family == "int-FU":
        return integrals.integral_fib_cheb_u(args[0], args[1])[1]
    if family == "int-FF1":
        return integrals.integral_fib_fib(args[0], args[1], integrals.Weight.FIRST_KIND)[1]
    if family == "int-FF2":
        return integrals.integral_fib_fib(args[0], args[1], integrals.Weight.SECOND_KIND)[1]
    raise ValueError(f"unknown task family {family!r}")


def run_sweep(config: RunConfig) -> list[Report]:
    config.validate()
    tasks = build_tasks(config)
    if config.workers == 1:
        reports = [execute_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            reports = list(pool.map(execute_task, tasks, chunksize=16))
    reports.sort(key=lambda r: r.sort_key())
    return reports


# ---------------------------------------------------------------------------
# Report rendering
# ---------------------------------------------------------------------------


def summarize(config: RunConfig, reports: list[Report]) -> dict:
    counts: dict[str, int] = {s.value: 0 for s in Status}
    per_identity: dict[str, dict[str, int]] = {}
    records = []
    for r in reports:
        counts[r.status.value] += 1
        bucket = per_identity.setdefault(r.identity, {s.value: 0 for s in Status})
        bucket[r.status.value] += 1
        if r.status is not Status.PASS:
            records.append(r.to_dict())
    return {
        "config": {
            "suite": config.suite,
            "jmax": config.jmax,
            "qmax": config.qmax,
        },
        "counts": counts,
        "per_identity": per_identity,
        "records": records,
    }


def render_json(summary: dict) -> str:
    return json.dumps(summary, indent=2, sort_keys=True) + "\n"


def render_text(summary: dict) -> str:
    lines = []
    cfg = summary["config"]
    lines.append(f"suite={cfg['suite']} jmax={cfg['jmax']} qmax={cfg['qmax']}")
    header = f"{'identity':<14}{'Pass':>8}{'PaperErratum':>14}{'Fail':>8}{'Unevaluable':>13}"
    lines.append(header)
    for identity in sorted(summary["per_identity"]):
        c = summary["per_identity"][identity]
        lines.append(
            f"{identity:<14}{c['Pass']:>8}{c['PaperErratum']:>14}{c['Fail']:>8}{c['Unevaluable']:>13}"
        )
    c = summary["counts"]
    lines.append(
        f"{'total':<14}{c['Pass']:>8}{c['PaperErratum']:>14}{c['Fail']:>8}{c['Unevaluable']:>13}"
    )
    interesting = [rec for rec in summary["records"] if rec["status"] != "Unevaluable"]
    if interesting:
        lines.append("non-pass records (excluding Unevaluable):")
        for rec in interesting:
            params = ",".join(f"{k}={v}" for k, v in sorted(rec["params"].items()))
            detail = ""
            if "printed_residual" in rec:
                detail = (
                    f" printed_residual={rec['printed_residual']}"
                    f" corrected_residual={rec.get('corrected_residual', '-')}"
                )
            lines.append(f"  {rec['identity']}({params}): {rec['status']}{detail}")
    failing = summary["counts"]["Fail"]
    lines.append(f"result: {'FAIL' if failing else 'OK'} ({failing} failing)")
    return "\n".join(lines) + "\n"
