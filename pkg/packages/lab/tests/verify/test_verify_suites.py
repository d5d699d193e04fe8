from __future__ import annotations

import json
from pathlib import Path

import pytest

from geodesic_lab.asymptotics import CoarseClass, FitReport, GrowthClass
from geodesic_lab.core.errors import InvalidParamsError, UsageError
from geodesic_lab.spaces import MarkedSpace, generate
from geodesic_lab.verify import (
    SUITE_REGISTRY,
    CheckStatus,
    Severity,
    SuiteContext,
    SuiteName,
    SuiteSpec,
    builtin_space,
    check,
    run_verify_suite,
    suite_spec,
    summarize,
)
from geodesic_lab.verify.suites.abel import fixed_value_checks
from geodesic_lab.verify.suites.common import fit_severity
from geodesic_lab.verify.suites.theorem14 import calculator_checks


def test_non_example_inverts_the_outcome() -> None:
    assert check("X", "s", True, "m").status is CheckStatus.PASS
    assert check("X", "s", False, "m").status is CheckStatus.FAIL
    expected = check("X", "grid", False, "m", non_example=True)
    assert expected.status is CheckStatus.EXPECTED_FAIL
    assert not expected.failed
    surprise = check("X", "grid", True, "m", non_example=True)
    assert surprise.failed
    assert surprise.message.startswith("non-example unexpectedly passed")


def test_summary_counts() -> None:
    checks = [
        check("A", "s", True, "ok"),
        check("B", "s", False, "bad"),
        check("C", "s", False, "meh", severity=Severity.WARN),
        check("D", "grid", False, "expected", non_example=True),
    ]
    s = summarize(checks)
    assert (s.passed, s.failed, s.warnings, s.expected_failures) == (1, 1, 1, 1)


def test_fixed_value_checks_pass() -> None:
    for c in [*calculator_checks(), *fixed_value_checks()]:
        assert c.status is CheckStatus.PASS, c.message


def test_unknown_names_are_rejected() -> None:
    with pytest.raises(UsageError):
        suite_spec("theorem99")
    with pytest.raises(InvalidParamsError):
        builtin_space("moebius")


def _fake_suite(checks):
    def run(ctx: SuiteContext, spaces: dict[str, MarkedSpace]):
        return list(checks)

    return run


def test_exit_code_follows_severity(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    warn_only = [check("A", "s", True, "ok"), check("W", "s", False, "w", severity=Severity.WARN)]
    monkeypatch.setitem(
        SUITE_REGISTRY, SuiteName.GIT, SuiteSpec(SuiteName.GIT, _fake_suite(warn_only), ())
    )
    code, path, report = run_verify_suite("git", out_dir=tmp_path, spaces={})
    assert code == 0
    assert report.ok
    assert path == tmp_path / "git.report.json"
    payload = json.loads(path.read_text(encoding="utf-8"))
    assert payload["summary"]["warnings"] == 1
    assert payload["config"]["contracts"]["schema_version"]

    code, _, _ = run_verify_suite("git", out_dir=tmp_path, spaces={}, fail_on_warn=True)
    assert code == 1

    broken = [*warn_only, check("E", "s", False, "boom", witness={"r": 3.0})]
    monkeypatch.setitem(
        SUITE_REGISTRY, SuiteName.GIT, SuiteSpec(SuiteName.GIT, _fake_suite(broken), ())
    )
    code, _, report = run_verify_suite("git", out_dir=tmp_path, spaces={})
    assert code == 1
    assert report.first_failure is not None
    assert report.first_failure.code == "E"


def test_reports_are_byte_identical_across_runs(tmp_path: Path) -> None:
    spaces = {"tree": generate("tree", {"branching": 2, "depth": 8})}
    _, first, report = run_verify_suite("git", out_dir=tmp_path / "a", spaces=spaces)
    _, second, _ = run_verify_suite("git", out_dir=tmp_path / "b", spaces=spaces, jobs=2)
    assert first.read_bytes() == second.read_bytes()

    by_code = {c.code: c for c in report.checks}
    assert by_code["TREE_IMAGE_POINT"].status is CheckStatus.PASS
    assert (tmp_path / "a" / "git" / "tree.contraction.csv").is_file()


def test_undecided_fits_only_warn() -> None:
    assert fit_severity(None) is Severity.WARN
    undecided = FitReport(GrowthClass.INCONCLUSIVE, (1.0, 10.0))
    assert fit_severity(undecided) is Severity.WARN
    hinted = FitReport(GrowthClass.INCONCLUSIVE, (1.0, 10.0), coarse_hint=CoarseClass.SUBLINEAR)
    assert hinted.coarse is CoarseClass.SUBLINEAR
    assert fit_severity(hinted) is Severity.ERROR
    assert fit_severity(FitReport(GrowthClass.BOUNDED, (1.0, 10.0))) is Severity.ERROR


def test_theorem15_handles_a_short_gamma(tmp_path: Path) -> None:
    spaces = {"log_space": builtin_space("log_space")}
    _, path, report = run_verify_suite("theorem15", out_dir=tmp_path, spaces=spaces)
    assert path.is_file()
    assert "DIVERGENCE_CONTRACTION_AGREEMENT" in {c.code for c in report.checks}
    assert (tmp_path / "theorem15" / "log_space.divergence.csv").is_file()


def test_abel_suite_takes_minlog2_from_A(tmp_path: Path) -> None:
    spaces = {"log_space_minlog2": builtin_space("log_space_minlog2")}
    _, _, report = run_verify_suite("abel", out_dir=tmp_path, spaces=spaces)
    by_code = {c.code: c for c in report.checks}
    assert "CONTRACTING_RHO_2" in by_code
    assert by_code["CONTRACTING_RHO_2"].severity is Severity.WARN


def test_grid_shortcuts_pass_certification(tmp_path: Path) -> None:
    spaces = {"grid": generate("grid_l1", {"width": 21, "height": 11})}
    _, _, report = run_verify_suite("theorem14", out_dir=tmp_path, spaces=spaces)
    shortcut = [c for c in report.checks if c.code == "SHORTCUT_CERTIFIED"]
    assert shortcut and all(c.status is CheckStatus.PASS for c in shortcut)
