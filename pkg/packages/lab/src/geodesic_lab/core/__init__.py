from .config import Settings, load_settings
from .errors import (
    DocumentError,
    GeodesicLabError,
    InvalidComparisonError,
    InvalidFunctionError,
    InvalidGraphError,
    InvalidParamsError,
    InvalidQueryError,
    InvalidSubspaceError,
    NotVerifiableError,
    OutOfDomainError,
    StageError,
    UsageError,
    VerificationFailure,
    WindowViolationError,
    stage_error_from_exc,
)
from .fs import atomic_write_bytes, atomic_write_text, ensure_parent, safe_unlink
from .hashing import FileDigest, sha256_bytes, sha256_file
from .json import atomic_write_json, json_safe, read_json, stable_json_dumps
from .logging import bound_run, configure_logging, get_logger
from .parallel import better_max, better_min, chunked, ordered_map, resolve_jobs
from .provenance import RunProvenance, Timer, new_run_id
from .time import monotonic_ms, utc_now_iso

JsonPrimitive = str | int | float | bool | None
JsonValue = JsonPrimitive | list["JsonValue"] | dict[str, "JsonValue"]
JsonObject = dict[str, JsonValue]

__all__ = [
    "atomic_write_bytes",
    "atomic_write_json",
    "atomic_write_text",
    "better_max",
    "better_min",
    "bound_run",
    "chunked",
    "configure_logging",
    "DocumentError",
    "ensure_parent",
    "FileDigest",
    "GeodesicLabError",
    "get_logger",
    "InvalidComparisonError",
    "InvalidFunctionError",
    "InvalidGraphError",
    "InvalidParamsError",
    "InvalidQueryError",
    "InvalidSubspaceError",
    "json_safe",
    "load_settings",
    "monotonic_ms",
    "new_run_id",
    "NotVerifiableError",
    "ordered_map",
    "OutOfDomainError",
    "read_json",
    "resolve_jobs",
    "RunProvenance",
    "safe_unlink",
    "Settings",
    "sha256_bytes",
    "sha256_file",
    "stable_json_dumps",
    "stage_error_from_exc",
    "StageError",
    "Timer",
    "UsageError",
    "utc_now_iso",
    "VerificationFailure",
    "WindowViolationError",
]
