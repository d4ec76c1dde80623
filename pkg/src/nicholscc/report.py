"""Check reports shared by the verifiers and the CLI."""

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import format_rational

__all__ = ["Check", "Report", "jsonable"]


def jsonable(value):
    """Exact-rational strings all the way down."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (Fraction, int)):
        return format_rational(Fraction(value))
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, "to_json"):
        return value.to_json()
    return value


@dataclass
class Check:
    name: str
    expected: object
    actual: object
    passed: bool = None

    def __post_init__(self):
        if self.passed is None:
            self.passed = jsonable(self.expected) == jsonable(self.actual)

    def to_json(self):
        return {"name": self.name, "expected": jsonable(self.expected),
                "actual": jsonable(self.actual), "pass": bool(self.passed)}


@dataclass
class Report:
    command: str
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    def check(self, name, expected, actual, passed=None):
        c = Check(name, expected, actual, passed)
        self.checks.append(c)
        return c

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_json(self):
        return {"command": self.command, "inputs": jsonable(self.inputs),
                "outputs": jsonable(self.outputs),
                "checks": [c.to_json() for c in self.checks], "pass": self.ok}

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=False)

    def text(self):
        lines = [f"{self.command}: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name}: expected {_short(c.expected)}, got {_short(c.actual)}")
        return "\n".join(lines)


def _short(v):
    s = json.dumps(jsonable(v))
    return s if len(s) <= 120 else s[:117] + "..."
