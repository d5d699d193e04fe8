from __future__ import annotations

import logging
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from typing import Any

import structlog
from rich.console import Console
from rich.logging import RichHandler
from structlog.contextvars import bound_contextvars, merge_contextvars

_CONFIGURED = False

# third-party loggers that chatter at DEBUG during plotting
_QUIET = ("matplotlib", "PIL")


def _processors(fmt: str) -> list[Any]:
    renderer: Any = (
        structlog.processors.KeyValueRenderer(sort_keys=True)
        if fmt == "console"
        else structlog.processors.JSONRenderer(sort_keys=True)
    )
    return [
        merge_contextvars,
        structlog.processors.add_log_level,
        structlog.processors.TimeStamper(fmt="iso", utc=True),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        renderer,
    ]


def configure_logging(*, level: str = "INFO", fmt: str = "console") -> None:
    """Route structlog through stdlib logging on stderr; idempotent per process."""
    global _CONFIGURED
    if _CONFIGURED:
        return

    root = logging.getLogger()
    root.handlers.clear()
    root.setLevel(level.upper())

    # stderr: stdout is reserved for command output
    handler: logging.Handler
    if fmt == "console":
        handler = RichHandler(
            rich_tracebacks=True,
            markup=False,
            show_time=False,
            show_path=False,
            console=Console(stderr=True),
        )
    else:
        handler = logging.StreamHandler(stream=sys.stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))
    handler.setLevel(level.upper())
    root.addHandler(handler)
    for name in _QUIET:
        logging.getLogger(name).setLevel(logging.WARNING)

    structlog.configure(
        processors=_processors(fmt),
        wrapper_class=structlog.make_filtering_bound_logger(level.upper()),
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )

    _CONFIGURED = True


def get_logger(name: str = "geodesic_lab") -> structlog.stdlib.BoundLogger:
    return structlog.get_logger(name)


@contextmanager
def bound_run(**values: Any) -> Iterator[None]:
    """Attach run identity (run_id, command) to every log line inside the block."""
    with bound_contextvars(**values):
        yield
