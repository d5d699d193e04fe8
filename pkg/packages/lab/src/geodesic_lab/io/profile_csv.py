"""
Profile CSV files.

One header per profile kind; numbers are written with 9 significant digits,
infinity as the literal ``inf`` and absent witnesses as empty cells. A
side-car ``<name>.meta.json`` carries the profile parameters and RunConfig.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Final, Sequence

import numpy as np
import polars as pl

from ..core import DocumentError, atomic_write_json, atomic_write_text
from ..divergence import DivergenceProfile
from ..projection import GeodesicImageProfile, GeodesicImageRecord, Profile, ProfileKind

HEADERS: Final[dict[ProfileKind, tuple[str, ...]]] = {
    ProfileKind.CONTRACTION: ("r", "value", "witness_x", "witness_y"),
    ProfileKind.DIVERGENCE: ("r", "value", "witness_s", "witness_length"),
    ProfileKind.MORSE: ("r", "value", "witness_y1", "witness_y2"),
    ProfileKind.MORSE_SEPARATION: ("r", "value", "witness_y1", "witness_y2"),
    ProfileKind.GEODESIC_IMAGE: ("r", "value", "witness_a", "witness_b", "max_interior_dist"),
}

ProfileRecords = Profile | DivergenceProfile | GeodesicImageProfile


def fmt_number(x: float | None) -> str | None:
    if x is None:
        return None
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(float(x), ".9g")


def _fmt_id(x: int | None) -> str | None:
    return None if x is None else str(int(x))


def _witness_pair(w: tuple[int, ...] | None) -> tuple[str | None, str | None]:
    if not w:
        return None, None
    return _fmt_id(w[0]), _fmt_id(w[-1])


def profile_rows(profile: Profile | DivergenceProfile) -> tuple[ProfileKind, list[tuple]]:
    if isinstance(profile, DivergenceProfile):
        rows = [
            (
                fmt_number(s.r),
                fmt_number(s.value if s.value is not None else math.inf),
                fmt_number(s.s),
                fmt_number(s.path.length) if s.path is not None else None,
            )
            for s in profile
        ]
        return ProfileKind.DIVERGENCE, rows
    rows = []
    for s in profile:
        wx, wy = _witness_pair(s.witness)
        value = s.value if s.value is not None else math.inf
        rows.append((fmt_number(s.r), fmt_number(value), wx, wy))
    return profile.kind, rows


def record_rows(records: Sequence[GeodesicImageRecord]) -> list[tuple]:
    return [
        (
            fmt_number(rec.max_endpoint_dist),
            fmt_number(rec.diam_proj),
            _fmt_id(rec.a),
            _fmt_id(rec.b),
            fmt_number(rec.max_interior_dist),
        )
        for rec in records
    ]


def _write(path: Path, kind: ProfileKind, rows: list[tuple]) -> None:
    header = HEADERS[kind]
    df = pl.DataFrame(
        {name: [row[i] for row in rows] for i, name in enumerate(header)},
        schema={name: pl.String for name in header},
    )
    atomic_write_text(Path(path), df.write_csv(null_value="", quote_style="necessary"))


def write_profile_csv(
    path: Path,
    profile: ProfileRecords,
    *,
    sidecar: dict[str, Any] | None = None,
) -> ProfileKind:
    """Write a profile (or geodesic-image records) and its side-car; returns the kind."""
    if isinstance(profile, GeodesicImageProfile):
        kind, rows = ProfileKind.GEODESIC_IMAGE, record_rows(profile.records)
        meta = {**profile.to_dict(), "segments": len(rows)}
    else:
        kind, rows = profile_rows(profile)
        meta = profile.to_dict()
        meta.pop("samples", None)
    _write(path, kind, rows)
    atomic_write_json(sidecar_path(path), {**meta, **(sidecar or {}), "kind": kind.value})
    return kind


def sidecar_path(csv_path: Path) -> Path:
    p = Path(csv_path)
    return p.with_name(p.stem + ".meta.json")


@dataclass(frozen=True, slots=True)
class ProfileTable:
    """A profile CSV read back: numeric r and value (inf kept), witness columns as text."""

    kind: ProfileKind
    r: np.ndarray
    value: np.ndarray
    frame: pl.DataFrame

    @property
    def finite_mask(self) -> np.ndarray:
        return np.isfinite(self.value)

    def __len__(self) -> int:
        return int(self.r.size)


def _parse_numbers(col: pl.Series, name: str) -> np.ndarray:
    out = np.empty(col.len(), dtype=np.float64)
    for i, cell in enumerate(col.to_list()):
        try:
            out[i] = float(cell)
        except (TypeError, ValueError):
            raise DocumentError(f"column {name!r} row {i + 1}: not a number: {cell!r}") from None
    return out


def read_profile_csv(path: Path) -> ProfileTable:
    """Read a CSV written by write_profile_csv; the kind comes from the header."""
    p = Path(path)
    try:
        df = pl.read_csv(p, infer_schema_length=0)
    except pl.exceptions.NoDataError:
        raise DocumentError(f"{p} is empty") from None
    except (OSError, pl.exceptions.PolarsError) as e:
        raise DocumentError(f"cannot read profile CSV {p}: {e}") from e

    header = tuple(df.columns)
    kinds = [k for k, h in HEADERS.items() if h == header]
    if not kinds:
        raise DocumentError(f"{p}: unknown profile header {','.join(header)}")
    if df.height == 0:
        raise DocumentError(f"{p} has no rows")
    r = _parse_numbers(df["r"], "r")
    value = _parse_numbers(df["value"], "value")
    if np.isnan(r).any() or np.isnan(value).any():
        raise DocumentError(f"{p}: NaN in r or value")
    return ProfileTable(kind=kinds[0], r=r, value=value, frame=df)
