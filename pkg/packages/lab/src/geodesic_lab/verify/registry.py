from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Final

from ..core.errors import UsageError
from ..spaces import MarkedSpace
from .suites import (
    SuiteContext,
    abel,
    git,
    robustness,
    run_abel,
    run_git,
    run_robustness,
    run_theorem14,
    run_theorem15,
    theorem14,
    theorem15,
)
from .types import CheckResult, SuiteName

SuiteFn = Callable[[SuiteContext, dict[str, MarkedSpace]], list[CheckResult]]


@dataclass(frozen=True, slots=True)
class SuiteSpec:
    name: SuiteName
    run: SuiteFn
    # builtin spaces used when no space is given
    spaces: tuple[str, ...]


# Registry
SUITE_REGISTRY: Final[dict[SuiteName, SuiteSpec]] = {
    SuiteName.THEOREM14: SuiteSpec(SuiteName.THEOREM14, run_theorem14, theorem14.SPACES),
    SuiteName.THEOREM15: SuiteSpec(SuiteName.THEOREM15, run_theorem15, theorem15.SPACES),
    SuiteName.GIT: SuiteSpec(SuiteName.GIT, run_git, git.SPACES),
    SuiteName.ABEL: SuiteSpec(SuiteName.ABEL, run_abel, abel.SPACES),
    SuiteName.ROBUSTNESS: SuiteSpec(SuiteName.ROBUSTNESS, run_robustness, robustness.SPACES),
}


def suite_spec(name: str | SuiteName) -> SuiteSpec:
    try:
        return SUITE_REGISTRY[SuiteName(name)]
    except ValueError:
        known = ", ".join(s.value for s in SuiteName)
        raise UsageError(f"unknown suite {name!r}; known: {known}") from None
