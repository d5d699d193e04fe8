from __future__ import annotations

from pathlib import Path
from typing import Any

from ..core.errors import UsageError
from ..io import RunConfig
from ..pipeline import RunContext


def run_config(ctx: RunContext) -> RunConfig:
    return RunConfig.model_validate(ctx.meta.get("config") or {})


def arg(ctx: RunContext, name: str, default: Any = None) -> Any:
    return (ctx.meta.get("args") or {}).get(name, default)


def required_arg(ctx: RunContext, name: str) -> Any:
    value = arg(ctx, name)
    if value is None:
        raise UsageError(f"missing argument: {name}", code="missing-param")
    return value


def output_path(ctx: RunContext, explicit: str | None, default_name: str) -> Path:
    return Path(explicit) if explicit else ctx.out_dir / default_name
