from __future__ import annotations

from structlog.contextvars import get_contextvars

from geodesic_lab.core import bound_run


def test_bound_run_scopes_run_identity() -> None:
    with bound_run(run_id="abc", command="verify"):
        assert get_contextvars() == {"run_id": "abc", "command": "verify"}
    assert "run_id" not in get_contextvars()
