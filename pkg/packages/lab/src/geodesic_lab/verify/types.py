from __future__ import annotations

from dataclasses import asdict, dataclass, field
from enum import StrEnum
from typing import Any, Mapping


class Severity(StrEnum):
    ERROR = "ERROR"
    WARN = "WARN"


class CheckStatus(StrEnum):
    PASS = "pass"
    FAIL = "fail"
    # a non-example failed the criterion, as it should
    EXPECTED_FAIL = "expected-fail"


class SuiteName(StrEnum):
    THEOREM14 = "theorem14"
    THEOREM15 = "theorem15"
    GIT = "git"
    ABEL = "abel"
    ROBUSTNESS = "robustness"


@dataclass(frozen=True, slots=True)
class CheckResult:
    code: str
    space: str
    severity: Severity
    status: CheckStatus
    message: str
    witness: Mapping[str, Any] | None = None
    details: Mapping[str, Any] | None = None

    @property
    def failed(self) -> bool:
        return self.status is CheckStatus.FAIL

    def to_dict(self) -> dict[str, Any]:
        return {
            "code": self.code,
            "space": self.space,
            "severity": self.severity.value,
            "status": self.status.value,
            "message": self.message,
            "witness": dict(self.witness) if self.witness is not None else None,
            "details": dict(self.details) if self.details is not None else None,
        }


@dataclass(frozen=True, slots=True)
class SuiteSummary:
    passed: int
    failed: int
    expected_failures: int
    warnings: int

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True, slots=True)
class SuiteReport:
    report_version: str
    suite: SuiteName
    spaces: tuple[str, ...]
    checks: tuple[CheckResult, ...]
    summary: SuiteSummary
    config: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(c.failed and c.severity is Severity.ERROR for c in self.checks)

    @property
    def first_failure(self) -> CheckResult | None:
        return next(
            (c for c in self.checks if c.failed and c.severity is Severity.ERROR), None
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "report_version": self.report_version,
            "suite": self.suite.value,
            "spaces": list(self.spaces),
            "checks": [c.to_dict() for c in self.checks],
            "summary": self.summary.to_dict(),
            "config": self.config,
        }
