from __future__ import annotations

from pathlib import Path

from geodesic_lab_contracts import get_contract_version_info

from ..core.logging import get_logger
from ..core.time import monotonic_ms
from ..io import RunConfig
from ..spaces import MarkedSpace
from .builtin import Scale, builtin_spaces
from .registry import suite_spec
from .report import build_suite_report, write_suite_report
from .suites import SuiteContext
from .types import SuiteName, SuiteReport

log = get_logger(__name__)


def report_path(out_dir: Path, suite: SuiteName) -> Path:
    return Path(out_dir) / f"{suite.value}.report.json"


def run_verify_suite(
    suite: str | SuiteName,
    *,
    out_dir: Path,
    cfg: RunConfig | None = None,
    spaces: dict[str, MarkedSpace] | None = None,
    scale: Scale | str = Scale.QUICK,
    jobs: int = 1,
    fail_on_warn: bool = False,
) -> tuple[int, Path, SuiteReport]:
    """
    Run one suite on the given spaces (its builtin set when None), save every
    profile it computes under `<out_dir>/<suite>/` and the report next to it.

    Returns (exit code, report path, report); the exit code is 0 iff no
    ERROR check failed (and no WARN check either with `fail_on_warn`).
    """
    cfg = cfg or RunConfig()
    spec = suite_spec(suite)
    scale = Scale(scale)
    if spaces is None:
        spaces = builtin_spaces(spec.spaces, scale)

    out_dir = Path(out_dir)
    artifacts = out_dir / spec.name.value
    artifacts.mkdir(parents=True, exist_ok=True)
    ctx = SuiteContext(cfg=cfg, scale=scale, jobs=jobs, artifacts_dir=artifacts)

    t0 = monotonic_ms()
    checks = spec.run(ctx, spaces)
    report = build_suite_report(
        suite=spec.name,
        spaces=list(spaces),
        checks=checks,
        cfg=cfg,
        extra={"scale": scale.value, "contracts": get_contract_version_info().to_dict()},
    )
    path = report_path(out_dir, spec.name)
    write_suite_report(path, report)

    summary = report.summary
    log.info(
        "suite finished",
        suite=spec.name.value,
        spaces=list(spaces),
        passed=summary.passed,
        failed=summary.failed,
        expected_failures=summary.expected_failures,
        warnings=summary.warnings,
        artifacts=len(ctx.artifacts),
        duration_ms=monotonic_ms() - t0,
    )
    failed = not report.ok or (fail_on_warn and summary.warnings > 0)
    return (1 if failed else 0), path, report
