from __future__ import annotations

import pytest

from geodesic_lab.core import errors, parallel, provenance, time


def test_stage_error_and_run_id() -> None:
    try:
        raise ValueError("boom")
    except Exception as exc:
        err = errors.stage_error_from_exc(exc)
    assert err.exc_type == "ValueError"
    assert err.code == "internal" and err.exit_code == 1
    assert "boom" in err.message
    assert "ValueError" in err.traceback

    rid1, rid2 = provenance.new_run_id(), provenance.new_run_id()
    assert rid1 != rid2 and len(rid1) == 32


@pytest.mark.parametrize(
    ("exc", "code", "exit_code"),
    [
        (errors.InvalidGraphError("x"), "invalid-graph", 2),
        (errors.UsageError("x", code="missing-param"), "missing-param", 2),
        (errors.WindowViolationError("x"), "window-violation", 3),
        (errors.VerificationFailure("x"), "verification-failure", 1),
    ],
)
def test_lab_errors_carry_code_and_exit(exc: Exception, code: str, exit_code: int) -> None:
    err = errors.stage_error_from_exc(exc)
    assert (err.code, err.exit_code) == (code, exit_code)


def test_timer_records_duration() -> None:
    with provenance.Timer() as t:
        pass
    assert t.duration_ms is not None and t.duration_ms >= 0
    assert time.utc_now_iso().endswith("Z")


def test_ordered_map_keeps_input_order() -> None:
    items = list(range(20))
    assert parallel.ordered_map(lambda x: x * x, items, jobs=4) == [x * x for x in items]


def test_better_max_breaks_ties_on_smallest_witness() -> None:
    a = (3.0, (2, 5))
    b = (3.0, (1, 9))
    assert parallel.better_max(a, b) == b
    assert parallel.better_max(b, a) == b
    assert parallel.better_min(None, a) == a
