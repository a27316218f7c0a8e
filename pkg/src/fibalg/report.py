"""Verification reports: case counts plus every failing case with both sides."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

from .scalars import GoldenScalar, rational_to_str


def exact_str(value: Any) -> str:
    """Lossless string form for ints, fractions, golden scalars, elements and vectors."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, Fraction)):
        return rational_to_str(value)
    if isinstance(value, GoldenScalar):
        return str(value)
    coords = getattr(value, "coords", None)
    if coords is not None:
        return "(" + ", ".join(exact_str(c) for c in coords) + ")"
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(exact_str(c) for c in value) + ")"
    return str(value)


@dataclass
class Failure:
    op: str
    inputs: dict[str, str]
    lhs: str
    rhs: str

    def to_dict(self) -> dict[str, Any]:
        return {"op": self.op, "inputs": dict(self.inputs), "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class VerificationReport:
    suite: str
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed_ms: int = 0
    parts: list[VerificationReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, op: str, inputs: Mapping[str, Any], lhs: Any, rhs: Any, ok: bool | None = None) -> bool:
        """Count one case; ``ok`` defaults to ``lhs == rhs``."""
        if ok is None:
            ok = lhs == rhs
        self.cases += 1
        if not ok:
            self.add_failure(op, inputs, lhs, rhs)
        return ok

    def tally(self, op: str, names: str, cases) -> None:
        """Record ``(args, (ok, lhs, rhs))`` pairs; inputs are named by the letters of ``names``."""
        for args, (ok, lhs, rhs) in cases:
            self.cases += 1
            if not ok:
                self.add_failure(op, dict(zip(names, args)), lhs, rhs)

    def add_failure(self, op: str, inputs: Mapping[str, Any], lhs: Any, rhs: Any) -> None:
        """Append a failure without counting a case."""
        self.failures.append(
            Failure(op, {k: exact_str(v) for k, v in inputs.items()}, exact_str(lhs), exact_str(rhs))
        )

    def merge(self, other: VerificationReport) -> VerificationReport:
        self.cases += other.cases
        self.failures.extend(other.failures)
        self.elapsed_ms += other.elapsed_ms
        return self

    def to_dict(self) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "suite": self.suite,
            "cases": self.cases,
            "failures": [f.to_dict() for f in self.failures],
            "elapsed_ms": self.elapsed_ms,
        }
        if self.parts:
            doc["suites"] = [p.to_dict() for p in self.parts]
        return doc

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.suite}: {self.cases} cases, {len(self.failures)} failures"
