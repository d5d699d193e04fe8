from .config import RunConfig, Tolerances, load_run_config
from .document import SpaceDocument, emit_space, load_space, parse_space_document
from .plot import plot_profile_csv, render_svg
from .profile_csv import (
    HEADERS,
    ProfileTable,
    fmt_number,
    read_profile_csv,
    sidecar_path,
    write_profile_csv,
)

__all__ = [
    "emit_space",
    "fmt_number",
    "HEADERS",
    "load_run_config",
    "load_space",
    "parse_space_document",
    "plot_profile_csv",
    "ProfileTable",
    "read_profile_csv",
    "render_svg",
    "RunConfig",
    "sidecar_path",
    "SpaceDocument",
    "Tolerances",
    "write_profile_csv",
]
