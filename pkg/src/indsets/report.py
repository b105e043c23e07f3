"""Verification reports shared by the scan and verify commands."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping


@dataclass(frozen=True)
class Finding:
    params: Dict[str, int]
    values: Dict[str, int]

    def describe(self) -> str:
        where = " ".join(f"{k}={v}" for k, v in self.params.items())
        got = " ".join(f"{k}={v}" for k, v in self.values.items())
        return f"{where}: {got}"


@dataclass
class VerificationReport:
    """Outcome of comparing several routes to the same quantity.

    ``notes`` holds informational mismatches that never fail the report.
    """

    suite: str
    cases: int = 0
    failures: List[Finding] = field(default_factory=list)
    notes: List[Finding] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, params: Mapping[str, int], values: Mapping[str, int]) -> bool:
        """Count one case; record it as a failure unless all values agree."""
        self.cases += 1
        if len(set(values.values())) <= 1:
            return True
        self.failures.append(Finding(dict(params), dict(values)))
        return False

    def fail(self, params: Mapping[str, int], values: Mapping[str, int]) -> None:
        self.cases += 1
        self.failures.append(Finding(dict(params), dict(values)))

    def note(self, params: Mapping[str, int], values: Mapping[str, int]) -> None:
        self.notes.append(Finding(dict(params), dict(values)))

    def merge(self, other: "VerificationReport") -> None:
        self.cases += other.cases
        self.failures.extend(other.failures)
        self.notes.extend(other.notes)
        for key, value in other.details.items():
            self.details[f"{other.suite}.{key}"] = value

    def render(self) -> str:
        lines = [f"suite: {self.suite}", f"cases: {self.cases}", f"failures: {len(self.failures)}"]
        for key in sorted(self.details):
            lines.append(f"{key}: {self.details[key]}")
        for f in self.failures:
            lines.append(f"FAIL {f.describe()}")
        for f in self.notes:
            lines.append(f"INFO {f.describe()}")
        lines.append(f"status: {self.status}")
        return "\n".join(lines)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "status": self.status,
            "failures": [{"params": f.params, "values": {k: str(v) for k, v in f.values.items()}}
                         for f in self.failures],
            "notes": [{"params": f.params, "values": {k: str(v) for k, v in f.values.items()}}
                      for f in self.notes],
            "details": self.details,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, default=str)
