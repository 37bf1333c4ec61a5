"""Verification reports shared by the identity and integral verifiers.

A report carries the exact left- and right-hand values of one identity at one
parameter point, plus the exact residual.  Where a published closed form is
known to disagree with its parent result, the verifier computes the verbatim
form *and* the theorem-consistent correction; the report then carries both
residuals and is classified PaperErratum (printed form fails, corrected form
exact) rather than Pass or Fail.  Printed formulas are never silently fixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class Status(str, Enum):
    PASS = "Pass"
    FAIL = "Fail"
    PAPER_ERRATUM = "PaperErratum"
    # Printed formula cannot be compared at these parameters (an undefined
    # symbol, or an index pairing that only lines up on a diagonal).
    UNEVALUABLE = "Unevaluable"


@dataclass(frozen=True)
class Check:
    """One named sub-comparison inside a report (lhs, rhs, exact residual)."""

    name: str
    lhs: object
    rhs: object

    @property
    def residual(self):
        return self.lhs - self.rhs

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class Report:
    identity: str
    params: tuple[tuple[str, object], ...]
    status: Status
    lhs: object = None
    rhs: object = None
    residual: object = None
    checks: tuple[Check, ...] = ()
    printed_residual: object = None
    corrected_residual: object = None
    note: str = ""

    @property
    def failed(self) -> bool:
        return self.status is Status.FAIL

    def params_dict(self) -> dict[str, object]:
        return dict(self.params)

    def sort_key(self) -> tuple:
        return (self.identity, tuple((k, _display(v)) for k, v in self.params))

    def to_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "params": {k: _display(v) for k, v in self.params},
            "status": self.status.value,
        }
        if self.lhs is not None:
            out["lhs"] = _display(self.lhs)
        if self.rhs is not None:
            out["rhs"] = _display(self.rhs)
        if self.residual is not None:
            out["residual"] = _display(self.residual)
        if self.checks:
            out["checks"] = [
                {
                    "name": c.name,
                    "lhs": _display(c.lhs),
                    "rhs": _display(c.rhs),
                    "residual": _display(c.residual),
                }
                for c in self.checks
            ]
        if self.printed_residual is not None:
            out["printed_residual"] = _display(self.printed_residual)
        if self.corrected_residual is not None:
            out["corrected_residual"] = _display(self.corrected_residual)
        if self.note:
            out["note"] = self.note
        return out


def _display(value) -> str:
    """Deterministic string form for report values of any scalar kind."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    if hasattr(value, "to_text"):
        return value.to_text()
    return str(value)


def make_report(
    identity: str,
    params: dict[str, object],
    checks: list[Check],
    *,
    printed_residual=None,
    corrected_residual=None,
    note: str = "",
    status: Status | None = None,
) -> Report:
    """Assemble a report from sub-checks with the standard status rules.

    All checks exact and no printed-form discrepancy: Pass.  A printed-form
    discrepancy whose corrected residual is exactly zero: PaperErratum.  Any
    other mismatch: Fail.  An explicit ``status`` overrides the rules (used
    for Unevaluable printed forms).
    """
    first_bad = next((c for c in checks if not c.ok), None)
    if status is None:
        if first_bad is not None:
            status = Status.FAIL
        elif printed_residual is None or printed_residual == 0:
            status = Status.PASS
        elif corrected_residual is not None and corrected_residual == 0:
            status = Status.PAPER_ERRATUM
        else:
            status = Status.FAIL
    head = first_bad if first_bad is not None else (checks[0] if checks else None)
    return Report(
        identity=identity,
        params=tuple(sorted(params.items())),
        status=status,
        lhs=head.lhs if head else None,
        rhs=head.rhs if head else None,
        residual=head.residual if head else None,
        checks=tuple(checks),
        printed_residual=printed_residual,
        corrected_residual=corrected_residual,
        note=note,
    )
