from __future__ import annotations

from pathlib import Path
from typing import Any, Sequence

from geodesic_lab_contracts import SuiteReportValidationError, validate_suite_report_dict

from ..core import atomic_write_json, json_safe
from ..core.errors import DocumentError
from ..io import RunConfig
from .types import CheckResult, CheckStatus, Severity, SuiteName, SuiteReport, SuiteSummary

REPORT_VERSION = "1.0"


def summarize(checks: Sequence[CheckResult]) -> SuiteSummary:
    return SuiteSummary(
        passed=sum(1 for c in checks if c.status is CheckStatus.PASS),
        failed=sum(1 for c in checks if c.failed and c.severity is Severity.ERROR),
        expected_failures=sum(1 for c in checks if c.status is CheckStatus.EXPECTED_FAIL),
        warnings=sum(1 for c in checks if c.failed and c.severity is Severity.WARN),
    )


def build_suite_report(
    *,
    suite: SuiteName,
    spaces: Sequence[str],
    checks: Sequence[CheckResult],
    cfg: RunConfig,
    extra: dict[str, Any] | None = None,
) -> SuiteReport:
    return SuiteReport(
        report_version=REPORT_VERSION,
        suite=suite,
        spaces=tuple(spaces),
        checks=tuple(checks),
        summary=summarize(checks),
        config={**cfg.to_dict(), **(extra or {})},
    )


def write_suite_report(out_path: Path, report: SuiteReport) -> None:
    """Schema-check and write atomically; no timestamps, so reruns are byte-identical."""
    payload = json_safe(report.to_dict())
    try:
        validate_suite_report_dict(payload)
    except SuiteReportValidationError as e:
        raise DocumentError(str(e)) from e
    out_path.parent.mkdir(parents=True, exist_ok=True)
    atomic_write_json(out_path, payload)
