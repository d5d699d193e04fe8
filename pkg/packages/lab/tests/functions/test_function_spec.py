from __future__ import annotations

import math

import numpy as np
import pytest

from geodesic_lab.core.errors import InvalidFunctionError
from geodesic_lab.functions import FunctionSpec, MorseFunctionSpec


@pytest.mark.parametrize(
    ("text", "r", "want"),
    [
        ("id", 3.0, 3.0),
        ("const:2", 100.0, 2.0),
        ("lin:0.5", 16.0, 8.0),
        ("lin:1,-2", 5.0, 3.0),
        ("pow:2", 3.0, 9.0),
        ("ceilsqrt", 10.0, 4.0),
        ("affsqrt:2,-1", 9.0, 5.0),
        ("log:2", 8.0, 3.0),
        ("minlog2", 8.0, 5.0),
    ],
)
def test_symbolic_values(text: str, r: float, want: float) -> None:
    f = FunctionSpec.parse(text)
    assert math.isclose(f(r), want)
    assert FunctionSpec.parse(f.to_text()).to_text() == f.to_text()


def test_sampled_is_piecewise_linear_and_clamped() -> None:
    f = FunctionSpec.parse("sampled:0=0,2=4,4=4")
    assert f.evaluate(np.array([-1.0, 1.0, 3.0, 10.0])).tolist() == [0.0, 2.0, 4.0, 4.0]


@pytest.mark.parametrize("text", ["", "cube", "lin", "pow:1,2,3", "sampled:1"])
def test_bad_specs_rejected(text: str) -> None:
    with pytest.raises(InvalidFunctionError):
        FunctionSpec.parse(text)


def test_morse_function_must_be_monotone() -> None:
    mu = MorseFunctionSpec.parse("lin:2,1", a_slope=1.0)
    assert mu(3.0, 2.0) == 9.0
    with pytest.raises(InvalidFunctionError):
        MorseFunctionSpec.parse("lin:-1,100")
