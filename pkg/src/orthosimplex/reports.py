"""Structured verification reports and their JSON-lines form."""

from __future__ import annotations

import json
import numbers
from dataclasses import dataclass


def _plain(value):
    """Coerce numpy scalars/arrays (and containers of them) to JSON-native types."""
    if isinstance(value, bool):
        return value
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        return float(value)
    if isinstance(value, numbers.Complex):
        return [float(value.real), float(value.imag)]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, "item"):  # 0-d numpy bool_ and friends
        return _plain(value.item())
    if hasattr(value, "tolist"):
        return _plain(value.tolist())
    return value


@dataclass
class VerificationReport:
    """Outcome of one identity check at one parameter sample.

    passed follows the convention: relative residual <= tolerance when
    |rhs| >= 1, absolute residual <= tolerance otherwise.  Checks with a
    bespoke scale divide both sides by it before constructing the report
    (and record the scale in parameters).
    """

    identity_id: str
    parameters: dict
    lhs: complex
    rhs: complex
    abs_residual: float
    rel_residual: float
    tolerance: float
    passed: bool
    runtime_ms: float = 0.0
    note: str = ""

    def to_json_dict(self, include_runtime: bool = False) -> dict:
        out = {
            "identity_id": self.identity_id,
            "parameters": _plain(self.parameters),
            "lhs": [float(self.lhs.real), float(self.lhs.imag)],
            "rhs": [float(self.rhs.real), float(self.rhs.imag)],
            "abs_residual": float(self.abs_residual),
            "rel_residual": float(self.rel_residual),
            "tolerance": float(self.tolerance),
            "passed": bool(self.passed),
        }
        if self.note:
            out["note"] = self.note
        if include_runtime:
            out["runtime_ms"] = self.runtime_ms
        return out

    def to_json(self, include_runtime: bool = False) -> str:
        return json.dumps(self.to_json_dict(include_runtime), separators=(", ", ": "))


def make_report(identity_id, parameters, lhs, rhs, tolerance, runtime_ms=0.0, note="") -> VerificationReport:
    lhs, rhs = complex(lhs), complex(rhs)
    abs_residual = float(abs(lhs - rhs))
    rel_residual = abs_residual / abs(rhs) if rhs != 0 else float("inf")
    if abs(rhs) >= 1.0:
        passed = bool(rel_residual <= tolerance)
    else:
        passed = bool(abs_residual <= tolerance)
    return VerificationReport(
        identity_id=identity_id,
        parameters=parameters,
        lhs=lhs,
        rhs=rhs,
        abs_residual=abs_residual,
        rel_residual=rel_residual,
        tolerance=tolerance,
        passed=passed,
        runtime_ms=runtime_ms,
        note=note,
    )


def residual_report(identity_id, parameters, residual, tolerance, note="") -> VerificationReport:
    """Report for a relative-residual check (lhs = residual, rhs = 0)."""
    residual = float(residual)
    return VerificationReport(
        identity_id=identity_id,
        parameters=parameters,
        lhs=complex(residual),
        rhs=0.0,
        abs_residual=residual,
        rel_residual=residual,
        tolerance=float(tolerance),
        passed=bool(residual <= tolerance),
        note=note,
    )
