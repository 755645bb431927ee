"""Machine-readable verification reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, List, Optional


@dataclass
class Failure:
    label: str
    inputs: Any
    expected: Any
    actual: Any

    def to_json(self) -> dict:
        return {"label": self.label, "inputs": self.inputs, "expected": self.expected, "actual": self.actual}


@dataclass
class VerifyReport:
    suite: str
    instances_checked: int = 0
    failures: List[Failure] = field(default_factory=list)
    wall_time: float = 0.0
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    @property
    def first_failure(self) -> Optional[Failure]:
        return self.failures[0] if self.failures else None

    def merge(self, other: "VerifyReport") -> "VerifyReport":
        self.instances_checked += other.instances_checked
        self.failures.extend(other.failures)
        self.wall_time += other.wall_time
        self.notes.extend(other.notes)
        return self

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "instances_checked": self.instances_checked,
            "failures": [f.to_json() for f in self.failures],
            "wall_time": round(self.wall_time, 6),
            "notes": list(self.notes),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = ["%s %s: %d instances, %d failures, %.2fs" % (
            status, self.suite, self.instances_checked, len(self.failures), self.wall_time)]
        if self.failures:
            f = self.failures[0]
            lines.append("  first counterexample: %s" % f.label)
            lines.append("    inputs:   %s" % json.dumps(f.inputs, ensure_ascii=False))
            lines.append("    expected: %s" % json.dumps(f.expected, ensure_ascii=False))
            lines.append("    actual:   %s" % json.dumps(f.actual, ensure_ascii=False))
        lines.extend("  note: %s" % n for n in self.notes)
        return "\n".join(lines)
