from __future__ import annotations

import numpy as np
import pytest

from geodesic_lab.asymptotics import (
    MIN_SAMPLES,
    CoarseClass,
    FunctionSamples,
    GrowthClass,
    WindowVerdict,
    abel_samples,
    abel_steps,
    asymp_equivalent,
    classify_growth,
    is_sublinear_window,
    preceq_fit,
    preceq_residual,
    staircase_corners,
)
from geodesic_lab.core.errors import InvalidParamsError, OutOfDomainError
from geodesic_lab.functions import FunctionSpec

R = np.geomspace(1.0, 1000.0, 32)


def _samples(fn) -> FunctionSamples:
    return FunctionSamples.of(R, fn(R))


@pytest.mark.parametrize(
    ("fn", "growth", "coarse"),
    [
        (lambda r: np.full_like(r, 7.0), GrowthClass.BOUNDED, CoarseClass.BOUNDED),
        (lambda r: 1 + 3 * np.log(r), GrowthClass.LOGARITHMIC, CoarseClass.SUBLINEAR),
        (lambda r: np.sqrt(r), GrowthClass.POWER, CoarseClass.SUBLINEAR),
        (lambda r: 2 * r, GrowthClass.LINEAR, CoarseClass.LINEAR),
        (lambda r: r**2, GrowthClass.POWER, CoarseClass.SUPERLINEAR),
    ],
)
def test_classify_growth(fn, growth: GrowthClass, coarse: CoarseClass) -> None:
    fit = classify_growth(_samples(fn))
    assert fit.growth_class is growth
    assert fit.coarse is coarse


def test_power_exponent_is_reported() -> None:
    fit = classify_growth(_samples(np.sqrt))
    assert fit.exponent == pytest.approx(0.5, abs=1e-6)
    assert fit.label.startswith("power(0.5")


def test_too_few_samples_is_inconclusive() -> None:
    fit = classify_growth(FunctionSamples.of([1, 2, 3], [1, 2, 3]))
    assert fit.growth_class is GrowthClass.INCONCLUSIVE


def test_sublinear_window() -> None:
    assert is_sublinear_window(_samples(np.sqrt)) is WindowVerdict.SUBLINEAR
    assert is_sublinear_window(_samples(lambda r: r)) is WindowVerdict.NOT_SUBLINEAR


def test_preorder_fit_finds_smallest_constants() -> None:
    f = _samples(lambda r: 2 * r + 3)
    g = _samples(lambda r: r)
    fit = preceq_fit(f, g)
    assert fit is not None
    assert fit.constants == (2.0, 1.0, 0.0, 4.0)
    assert preceq_fit(_samples(lambda r: r**2), g) is None


def test_preorder_residual_measures_violation() -> None:
    g = _samples(lambda r: r)
    fit = preceq_fit(_samples(lambda r: 2 * r + 3), g)
    assert fit is not None
    assert preceq_residual(_samples(lambda r: 2 * r + 3), g, fit) == 0.0
    assert preceq_residual(_samples(lambda r: 2 * r + 10), g, fit) == pytest.approx(6.0)


def test_equivalence_is_symmetric_for_comparable_functions() -> None:
    up, down = asymp_equivalent(_samples(np.sqrt), _samples(lambda r: 2 * np.sqrt(r)))
    assert up is not None and down is not None


def test_function_samples_validation() -> None:
    with pytest.raises(InvalidParamsError):
        FunctionSamples.of([1, 1], [0, 0])
    with pytest.raises(InvalidParamsError):
        FunctionSamples.of([1, 2], [0, float("inf")])


def test_abel_steps_examples() -> None:
    half = FunctionSpec.parse("lin:0.5")
    assert abel_steps(half, 2.0, 16.0) == 4
    assert abel_steps(half, 2.0, 1.5) == 0
    assert abel_steps(FunctionSpec.parse("affsqrt:2,-1"), 1.0, 9.0) == 3
    with pytest.raises(OutOfDomainError):
        abel_steps(half, 2.0, 0.5)
    assert abel_samples(half, 2.0, [2.0, 4.0, 8.0]).values == (1.0, 2.0, 3.0)


@pytest.mark.parametrize("c", [0.25, 3.0, 40.0])
@pytest.mark.parametrize(
    "fn",
    [
        lambda r: np.full_like(r, 7.0),
        lambda r: 1 + 3 * np.log(r),
        np.sqrt,
        lambda r: 2 * r,
        lambda r: r**2,
    ],
)
def test_classification_ignores_scaling(fn, c: float) -> None:
    base = classify_growth(_samples(fn))
    scaled = classify_growth(FunctionSamples.of(R, c * fn(R)))
    assert scaled.growth_class is base.growth_class
    assert scaled.coarse is base.coarse


def test_constant_profile_is_bounded_below_min_samples() -> None:
    fit = classify_growth(FunctionSamples.of([1, 2, 3], [0, 0, 0]))
    assert fit.growth_class is GrowthClass.BOUNDED
    assert fit.diagnostics["reason"] == "constant"
    assert MIN_SAMPLES > 3


def test_staircase_corners_are_the_jumps() -> None:
    r = np.arange(1.0, 11.0)
    v = np.array([0, 0, 2, 2, 2, 3, 3, 5, 5, 5], dtype=float)
    cr, cv = staircase_corners(r, v)
    assert cr.tolist() == [3.0, 6.0, 8.0]
    assert cv.tolist() == [2.0, 3.0, 5.0]


def test_square_root_staircase_is_sublinear() -> None:
    r = np.arange(1.0, 401.0)
    fit = classify_growth(FunctionSamples.of(r, np.floor(np.sqrt(r))))
    assert fit.growth_class is not GrowthClass.INCONCLUSIVE
    assert fit.coarse is CoarseClass.SUBLINEAR


def test_abel_steps_takes_the_input_at_face_value() -> None:
    half = FunctionSpec.parse("lin:0.5")
    assert abel_steps(half, 2.0, 2.0 - 1e-10) == 0
    assert abel_steps(half, 2.0, 2.0) == 1
