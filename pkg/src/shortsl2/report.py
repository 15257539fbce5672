"""Check results that carry the offending tuples and their residuals."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Violation:
    tuple: tuple
    residual: dict

    def to_dict(self) -> dict:
        return {"tuple": list(self.tuple), "residual": dict(self.residual)}


@dataclass
class Check:
    id: str
    identity: str
    tuples_checked: int = 0
    violations: list = field(default_factory=list)
    note: str = ""

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, labels, residual, space_labels) -> None:
        """Count one tuple; keep it if ``residual`` (a vector) is nonzero."""
        self.tuples_checked += 1
        res = {space_labels[i]: str(x) for i, x in enumerate(residual) if x}
        if res:
            self.violations.append(Violation(tuple(labels), res))

    def fail(self, labels, message: str) -> None:
        self.violations.append(Violation(tuple(labels), {"error": message}))

    def to_dict(self, limit: int | None = None) -> dict:
        viol = self.violations if limit is None else self.violations[:limit]
        d = {
            "id": self.id,
            "identity": self.identity,
            "tuples_checked": self.tuples_checked,
            "status": "pass" if self.ok else "fail",
            "violation_count": len(self.violations),
            "violations": [v.to_dict() for v in viol],
        }
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class Report:
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    def get(self, check_id: str) -> Check:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def failing(self) -> list[str]:
        return [c.id for c in self.checks if not c.ok]

    def to_dict(self, limit: int | None = None) -> list[dict]:
        return [c.to_dict(limit) for c in self.checks]


class CheckFailed(ValueError):
    """Raised when a construction refuses input that fails its prerequisites."""

    def __init__(self, message: str, report: Report | None = None):
        super().__init__(message)
        self.report = report
