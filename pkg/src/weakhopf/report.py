"""Verification reports: named checks with first-failure witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple

from .linalg import format_frac


@dataclass(frozen=True)
class Witness:
    """Where a check failed: basis indices plus both sides' coefficients."""

    indices: Tuple[int, ...]
    lhs: Tuple
    rhs: Tuple
    detail: str = ""

    def describe(self) -> str:
        parts = []
        if self.detail:
            parts.append(self.detail)
        if self.indices:
            parts.append("indices=%s" % (tuple(self.indices),))
        parts.append("lhs=[%s]" % " ".join(format_frac(x) for x in self.lhs))
        parts.append("rhs=[%s]" % " ".join(format_frac(x) for x in self.rhs))
        return " ".join(parts)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: Optional[Witness] = None


@dataclass
class VerificationReport:
    """Ordered list of named checks; passes iff every check passed."""

    suite: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, witness: Optional[Witness] = None) -> None:
        self.checks.append(Check(name, bool(passed), None if passed else witness))

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    def failed_checks(self):
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_lines(self):
        lines = []
        for c in self.checks:
            if c.passed:
                lines.append("[PASS] %s/%s" % (self.suite, c.name))
            else:
                msg = "[FAIL] %s/%s" % (self.suite, c.name)
                if c.witness is not None:
                    msg += " -- " + c.witness.describe()
                lines.append(msg)
        return lines

    def to_dict(self):
        out = []
        for c in self.checks:
            entry = {"suite": self.suite, "name": c.name, "passed": c.passed}
            if c.witness is not None:
                entry["witness"] = {
                    "indices": list(c.witness.indices),
                    "lhs": [format_frac(x) for x in c.witness.lhs],
                    "rhs": [format_frac(x) for x in c.witness.rhs],
                    "detail": c.witness.detail,
                }
            out.append(entry)
        return out


def comparison(report, name, pairs, detail=""):
    """Add a check comparing (indices, lhs, rhs) triples; first failure wins."""
    for indices, lhs, rhs in pairs:
        if tuple(lhs) != tuple(rhs):
            report.add(name, False, Witness(tuple(indices), tuple(lhs), tuple(rhs), detail))
            return False
    report.add(name, True)
    return True
