from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

from ...asymptotics import MIN_SAMPLES, CoarseClass, FitReport
from ...core.logging import get_logger
from ...divergence import (
    DivergenceParams,
    DivergenceProfile,
    default_s_grid,
    divergence_profile,
    divergence_r_grid,
)
from ...io import RunConfig, write_profile_csv
from ...io.profile_csv import ProfileRecords
from ...projection import Profile, ProjectionParams, contraction_profile, radius_grid
from ...spaces import MarkedSpace
from ..builtin import Scale
from ..types import CheckResult, CheckStatus, Severity

log = get_logger(__name__)

GRID_POINTS = 24
# the classifier fits the top half, so the window keeps at least twice its minimum
GRID_MIN_POINTS = 2 * MIN_SAMPLES
# centre samples per radius in divergence sweeps
MAX_CENTRES = 128
SUBLINEAR_OR_BOUNDED = (CoarseClass.BOUNDED, CoarseClass.SUBLINEAR)


@dataclass(slots=True)
class SuiteContext:
    """Shared state of one suite run: config, worker count and the artifact directory."""

    cfg: RunConfig
    scale: Scale = Scale.QUICK
    jobs: int = 1
    artifacts_dir: Path | None = None
    artifacts: list[Path] = field(default_factory=list)
    _profiles: dict[tuple[str, str, float], Profile] = field(default_factory=dict)

    def grid(self, space: MarkedSpace, r_max: float | None = None) -> list[float]:
        return radius_grid(
            space.valid_radius if r_max is None else r_max,
            space.graph.resolution,
            count=GRID_POINTS,
            min_count=GRID_MIN_POINTS,
        )

    def contraction(
        self, name: str, space: MarkedSpace, *, rho1: str = "id", epsilon: float = 0.0
    ) -> Profile:
        """Contraction profile over the whole valid window, memoized per suite run."""
        key = (name, rho1, float(epsilon))
        hit = self._profiles.get(key)
        if hit is not None:
            return hit
        profile = contraction_profile(
            space,
            ProjectionParams(epsilon=epsilon),
            rho1,
            space.valid_radius,
            self.cfg.sampling_plan(),
            r_grid=self.grid(space),
            jobs=self.jobs,
        )
        self._profiles[key] = profile
        suffix = "contraction"
        if rho1 != "id" or epsilon:
            suffix = f"contraction-{rho1}-eps{epsilon:g}"
        self.save(f"{name}.{suffix}", profile)
        return profile

    def s_grid(self, space: MarkedSpace) -> list[float]:
        gamma = space.gamma
        stride = 1 if gamma is None else max(1, len(gamma) // MAX_CENTRES)
        return default_s_grid(space, stride=stride)

    def divergence_grid(self, space: MarkedSpace) -> tuple[list[float], list[float]]:
        """(r grid, s grid) inside the window where gamma admits every radius."""
        s_grid = self.s_grid(space)
        return divergence_r_grid(space, s_grid, count=GRID_POINTS), s_grid

    def divergence(
        self, name: str, space: MarkedSpace, dp: DivergenceParams | None = None
    ) -> DivergenceProfile:
        r_grid, s_grid = self.divergence_grid(space)
        profile = divergence_profile(space, dp, r_grid, s_grid, jobs=self.jobs)
        suffix = "divergence" if dp is None else f"divergence-{dp.to_text()}"
        self.save(f"{name}.{suffix}", profile)
        return profile

    def classify(self, profile: Profile) -> FitReport | None:
        samples = profile.finite()
        return None if samples is None else self.cfg.classify(samples)

    def save(self, stem: str, profile: ProfileRecords) -> None:
        if self.artifacts_dir is None:
            return
        safe = stem.replace(":", "_").replace(",", "_").replace("/", "_")
        path = self.artifacts_dir / f"{safe}.csv"
        write_profile_csv(path, profile, sidecar={"config": self.cfg.to_dict()})
        self.artifacts.append(path)
        log.debug("suite artifact written", path=str(path))


def check(
    code: str,
    space: str,
    ok: bool,
    message: str,
    *,
    severity: Severity = Severity.ERROR,
    non_example: bool = False,
    witness: Mapping[str, Any] | None = None,
    details: Mapping[str, Any] | None = None,
) -> CheckResult:
    """
    One check outcome. For a non-example the criterion is expected to fail:
    failing gives expected-fail and passing is a real failure.
    """
    if non_example:
        status = CheckStatus.FAIL if ok else CheckStatus.EXPECTED_FAIL
        if ok:
            message = f"non-example unexpectedly passed: {message}"
    else:
        status = CheckStatus.PASS if ok else CheckStatus.FAIL
    return CheckResult(
        code=code,
        space=space,
        severity=severity,
        status=status,
        message=message,
        witness=witness,
        details=details,
    )


def fit_label(fit: FitReport | None) -> str:
    return "no finite samples" if fit is None else fit.label


def fit_dict(fit: FitReport | None) -> dict[str, Any] | None:
    return None if fit is None else fit.to_dict()


def fit_severity(fit: FitReport | None, severity: Severity = Severity.ERROR) -> Severity:
    """An undecided fit is reported, never failed on."""
    if fit is None or fit.coarse is CoarseClass.INCONCLUSIVE:
        return Severity.WARN
    return severity
