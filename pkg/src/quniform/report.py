"""Verdict reports with per-clause witnesses.

A report is a list of named clauses, each PASS or FAIL, plus free-form
details (ordered key/value pairs) that are printed after the clauses.
Witnesses and details hold only strings, lists and dicts so that the
machine rendering is plain JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

PASS = "PASS"
FAIL = "FAIL"
ERROR = "ERROR"


@dataclass(frozen=True)
class Clause:
    name: str
    passed: bool
    witness: dict[str, Any] | None = None

    @property
    def verdict(self) -> str:
        return PASS if self.passed else FAIL

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "verdict": self.verdict, "witness": self.witness}


@dataclass
class Report:
    command: str
    clauses: list[Clause] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)
    artifacts: list[str] = field(default_factory=list)
    error: str | None = None

    @property
    def verdict(self) -> str:
        if self.error is not None:
            return ERROR
        return PASS if all(c.passed for c in self.clauses) else FAIL

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def add(self, name: str, passed: bool, witness: dict[str, Any] | None = None) -> Clause:
        clause = Clause(name, bool(passed), None if passed else witness)
        self.clauses.append(clause)
        return clause

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.clauses:
            self.clauses.append(Clause(prefix + c.name, c.passed, c.witness))

    def clause(self, name: str) -> Clause:
        for c in self.clauses:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list[Clause]:
        return [c for c in self.clauses if not c.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "verdict": self.verdict,
            "error": self.error,
            "clauses": [c.to_dict() for c in self.clauses],
            "details": self.details,
            "artifacts": list(self.artifacts),
        }

    def to_machine(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"command: {self.command}", f"verdict: {self.verdict}"]
        if self.error is not None:
            lines.append(f"error: {self.error}")
        for c in self.clauses:
            line = f"[{c.verdict}] {c.name}"
            if c.witness:
                line += "  witness: " + _flat(c.witness)
            lines.append(line)
        for key, value in self.details.items():
            if isinstance(value, list):
                lines.append(f"{key}:")
                lines.extend(f"  {_flat(v)}" for v in value)
            else:
                lines.append(f"{key}: {_flat(value)}")
        for path in self.artifacts:
            lines.append(f"artifact: {path}")
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return self.to_text()


def _flat(value: Any) -> str:
    if isinstance(value, dict):
        return " ".join(f"{k}={_flat(v)}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_flat(v) for v in value) + "]"
    return str(value)
