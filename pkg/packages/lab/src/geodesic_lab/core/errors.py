from __future__ import annotations

import traceback
from dataclasses import dataclass
from typing import ClassVar


class GeodesicLabError(RuntimeError):
    """Base error"""

    code: ClassVar[str] = "internal"
    exit_code: ClassVar[int] = 2


class InvalidGraphError(GeodesicLabError):
    """Edge list does not describe a connected graph with positive finite weights"""

    code = "invalid-graph"


class InvalidSubspaceError(GeodesicLabError):
    """Empty or out-of-range subspace"""

    code = "invalid-subspace"


class InvalidQueryError(GeodesicLabError):
    """Query points violate the operation's preconditions"""

    code = "invalid-query"


class InvalidFunctionError(GeodesicLabError):
    """Function spec cannot be parsed or violates its hypotheses on the sample grid"""

    code = "invalid-function"


class InvalidParamsError(GeodesicLabError):
    """Numeric parameters outside their admissible range"""

    code = "invalid-params"


class InvalidComparisonError(GeodesicLabError):
    """Profile and hypothesis were computed under different assumptions"""

    code = "invalid-comparison"


class OutOfDomainError(GeodesicLabError):
    """Argument below the domain of an iteration"""

    code = "out-of-domain"


class UsageError(GeodesicLabError):
    """Command-line usage error"""

    code = "usage"

    def __init__(self, message: str, *, code: str | None = None) -> None:
        super().__init__(message)
        if code is not None:
            self.code = code  # type: ignore[misc]


class DocumentError(GeodesicLabError):
    """Space document or CSV input is malformed"""

    code = "invalid-document"


class WindowViolationError(GeodesicLabError):
    """Requested radii or parameters fall outside the valid window"""

    code = "window-violation"
    exit_code = 3


class NotVerifiableError(GeodesicLabError):
    """Tail condition never achieved on the sample grid"""

    code = "not-verifiable-on-window"
    exit_code = 1


class VerificationFailure(GeodesicLabError):
    """An acceptance criterion failed"""

    code = "verification-failure"
    exit_code = 1


@dataclass(frozen=True, slots=True)
class StageError:
    """
    A normalized error record for stage failures.
    """

    exc_type: str
    code: str
    exit_code: int
    message: str
    traceback: str


def stage_error_from_exc(exc: BaseException) -> StageError:
    if isinstance(exc, GeodesicLabError):
        code, exit_code = exc.code, exc.exit_code
    else:
        code, exit_code = "internal", 1
    return StageError(
        exc_type=type(exc).__name__,
        code=code,
        exit_code=exit_code,
        message=str(exc),
        traceback="".join(traceback.format_exception(exc)),
    )
