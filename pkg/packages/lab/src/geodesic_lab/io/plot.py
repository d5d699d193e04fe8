from __future__ import annotations

from io import BytesIO
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import numpy as np  # noqa: E402
from matplotlib import rcParams  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402
from matplotlib.transforms import blended_transform_factory  # noqa: E402

from ..asymptotics import FitReport, FunctionSamples, classify_growth  # noqa: E402
from ..core import atomic_write_bytes, get_logger  # noqa: E402
from .profile_csv import ProfileTable, read_profile_csv  # noqa: E402

log = get_logger(__name__)

# fixed ids in the SVG so identical input gives identical bytes
rcParams["svg.hashsalt"] = "geodesic-lab"

_INF_BAND_Y = 0.96


def envelope(table: ProfileTable) -> tuple[np.ndarray, np.ndarray]:
    """Max value per distinct r; infinite values stay infinite."""
    order = np.lexsort((table.value, table.r))
    r, v = table.r[order], table.value[order]
    ur, start = np.unique(r, return_index=True)
    return ur, np.maximum.reduceat(v, start)


def fit_annotation(r: np.ndarray, v: np.ndarray) -> FitReport | None:
    finite = np.isfinite(v)
    if finite.sum() < 2:
        return None
    return classify_growth(FunctionSamples.of(r[finite].tolist(), v[finite].tolist()))


def render_svg(table: ProfileTable, *, title: str | None = None) -> bytes:
    r, v = envelope(table)
    finite = np.isfinite(v)
    fit = fit_annotation(r, v)

    fig = Figure(figsize=(10, 4))
    ax_lin, ax_log = fig.subplots(1, 2)
    for ax, scale in ((ax_lin, "linear"), (ax_log, "log")):
        rr, vv = r[finite], v[finite]
        if scale == "log":
            pos = (rr > 0) & (vv > 0)
            rr, vv = rr[pos], vv[pos]
            ax.set_xscale("log")
            ax.set_yscale("log")
        ax.plot(rr, vv, marker="o", markersize=3, linewidth=1)
        if (~finite).any():
            band = blended_transform_factory(ax.transData, ax.transAxes)
            ax.scatter(
                r[~finite],
                np.full((~finite).sum(), _INF_BAND_Y),
                marker="^",
                color="tab:red",
                transform=band,
                clip_on=False,
                label="inf",
            )
            ax.legend(loc="lower right", fontsize=8)
        ax.set_xlabel("r")
        ax.set_ylabel("value")
        ax.set_title(f"{scale}")
        ax.grid(True, linewidth=0.3)

    label = fit.label if fit is not None else "no finite samples"
    fig.suptitle(f"{title or table.kind.value}: {label}")
    fig.tight_layout()

    buf = BytesIO()
    fig.savefig(buf, format="svg", metadata={"Date": None})
    return buf.getvalue()


def plot_profile_csv(csv_path: Path, out_svg: Path) -> FitReport | None:
    table = read_profile_csv(csv_path)
    atomic_write_bytes(Path(out_svg), render_svg(table, title=Path(csv_path).stem))
    r, v = envelope(table)
    fit = fit_annotation(r, v)
    log.info(
        "plot written",
        csv=str(csv_path),
        svg=str(out_svg),
        rows=len(table),
        growth=fit.label if fit is not None else None,
    )
    return fit
