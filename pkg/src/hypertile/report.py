"""Verification reports shared by all theorem checkers.

A report passes exactly when its failure list is empty; failures are plain
strings describing each mismatch.  Set comparisons keep the offending
labels so enumeration-scale failures stay debuggable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lattice import CubeSet


@dataclass(frozen=True)
class SetMismatch:
    extra: CubeSet
    missing: CubeSet


@dataclass
class Report:
    """Outcome of one theorem verification at one size."""

    theorem: str
    n: int
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "pass": self.passed,
            "failures": list(self.failures),
        }

    def note(self, message: str) -> None:
        self.failures.append(message)

    def check(self, ok: bool, message: str) -> bool:
        if not ok:
            self.failures.append(message)
        return ok

    def check_equal(self, got, want, what: str) -> bool:
        if got == want:
            return True
        self.failures.append(f"{what}: got {got}, want {want}")
        return False

    def check_sets(self, got: CubeSet, want: CubeSet, what: str) -> bool:
        """Record an exact set comparison, keeping the mismatch labels."""
        if got == want:
            return True
        extra = got - want
        missing = want - got
        parts = [f"{what}: mismatch"]
        if len(extra):
            parts.append(f"{len(extra)} unexpected e.g. {extra.labels[:3]}")
        if len(missing):
            parts.append(f"{len(missing)} missing e.g. {missing.labels[:3]}")
        self.failures.append("; ".join(parts))
        mismatches = getattr(self, "mismatches", None)
        if mismatches is not None:
            mismatches[what] = SetMismatch(extra=extra, missing=missing)
        return False
