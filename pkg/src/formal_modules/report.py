"""Verification reports: a flat list of named checks with pass/fail and an optional witness."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass
class Check:
    check: str
    params: dict
    passed: bool
    witness: Optional[str] = None

    def to_json(self) -> dict:
        out: dict[str, Any] = {"check": self.check, "params": self.params, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    checks: list = field(default_factory=list)

    def add(self, check: str, params: dict, passed: bool, witness=None) -> bool:
        self.checks.append(Check(check, dict(params), bool(passed), None if witness is None else str(witness)))
        return bool(passed)

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def __bool__(self):
        return self.passed

    def __len__(self):
        return len(self.checks)

    def to_json(self) -> list:
        return [c.to_json() for c in self.checks]

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def render(self) -> str:
        lines = []
        for c in self.checks:
            params = " ".join(f"{k}={v}" for k, v in sorted(c.params.items()))
            status = "PASS" if c.passed else "FAIL"
            line = f"[{status}] {c.check} {params}".rstrip()
            if c.witness:
                line += f"  witness: {c.witness}"
            lines.append(line)
        return "\n".join(lines)
