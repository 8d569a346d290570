from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from qlax.exact import format_rational


def jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, bool) or x is None or isinstance(x, (str, float)):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "__dict__"):
        return jsonable(vars(x))
    return str(x)


@dataclass
class Report:
    """Outcome of an exact check over one or more draws.

    ``controls`` counts deliberately corrupted variants that were run, and
    ``controls_failed_as_expected`` those that produced a nonzero residual.
    A report is ``ok`` only if every draw passed and every control failed.
    """

    check: str
    draws: int = 0
    passes: int = 0
    controls: int = 0
    controls_failed_as_expected: int = 0
    first_failure: dict | None = None
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (self.draws > 0 and self.passes == self.draws
                and self.controls_failed_as_expected == self.controls)

    def record(self, passed: bool, **detail) -> bool:
        self.draws += 1
        if passed:
            self.passes += 1
        elif self.first_failure is None:
            self.first_failure = {"draw": self.draws - 1, **detail}
        return passed

    def control(self, residual: Fraction, name: str) -> bool:
        """Register a perturbation control; it must give a nonzero residual."""
        self.controls += 1
        failed = residual != 0
        if failed:
            self.controls_failed_as_expected += 1
        elif self.first_failure is None:
            self.first_failure = {"draw": self.draws, "control_passed_vacuously": name}
        return failed

    def merge(self, other: "Report") -> "Report":
        if other.first_failure is not None and self.first_failure is None:
            self.first_failure = {**other.first_failure, "draw": self.draws + other.first_failure.get("draw", 0)}
        self.draws += other.draws
        self.passes += other.passes
        self.controls += other.controls
        self.controls_failed_as_expected += other.controls_failed_as_expected
        for k, v in other.notes.items():
            if isinstance(v, int) and not isinstance(v, bool):
                self.notes[k] = self.notes.get(k, 0) + v
            else:
                self.notes.setdefault(k, v)
        return self

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "draws": self.draws,
            "passes": self.passes,
            "controls": self.controls,
            "controls_failed_as_expected": self.controls_failed_as_expected,
            "first_failure": jsonable(self.first_failure),
            "notes": jsonable(self.notes),
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)
