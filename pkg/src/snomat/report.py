"""Validation reports shared by the word, matrix, family and Gray checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Violation:
    """One failed property.

    ``kind`` is a short machine-readable tag (``"border"``, ``"cross"``,
    ``"factor"``, ``"self_overlap"``, ``"overlap"``, ...), ``subjects`` names
    the offending items and ``witness`` holds whatever evidence the checker
    produced.
    """

    kind: str
    subjects: tuple
    detail: str = ""
    witness: Any = None

    def __str__(self) -> str:
        text = f"{self.kind}: {self.detail}" if self.detail else self.kind
        return text


@dataclass(frozen=True)
class Report:
    violations: tuple[Violation, ...] = ()
    # malformed input (duplicates, wrong lengths) kept apart from property failures
    structural: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations and not self.structural

    def kinds(self) -> list[str]:
        return [v.kind for v in self.violations]

    def merge(self, other: "Report") -> "Report":
        return Report(
            self.violations + other.violations,
            self.structural + other.structural,
            self.warnings + other.warnings,
            self.checked + other.checked,
        )

    def lines(self) -> list[str]:
        out = [f"structural: {s}" for s in self.structural]
        out += [str(v) for v in self.violations]
        out += [f"warning: {w}" for w in self.warnings]
        return out


@dataclass
class ReportBuilder:
    violations: list[Violation] = field(default_factory=list)
    structural: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    checked: int = 0

    def add(self, kind: str, subjects: tuple, detail: str = "", witness: Any = None) -> None:
        self.violations.append(Violation(kind, subjects, detail, witness))

    def build(self) -> Report:
        return Report(
            tuple(self.violations),
            tuple(self.structural),
            tuple(self.warnings),
            self.checked,
        )
