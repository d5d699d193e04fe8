from .builtin import BUILTIN_SPACES, Scale, builtin_space, builtin_spaces
from .registry import SUITE_REGISTRY, SuiteSpec, suite_spec
from .report import REPORT_VERSION, build_suite_report, summarize, write_suite_report
from .runner import report_path, run_verify_suite
from .suites import SuiteContext, check
from .types import CheckResult, CheckStatus, Severity, SuiteName, SuiteReport, SuiteSummary

__all__ = [
    "build_suite_report",
    "BUILTIN_SPACES",
    "builtin_space",
    "builtin_spaces",
    "check",
    "CheckResult",
    "CheckStatus",
    "REPORT_VERSION",
    "report_path",
    "run_verify_suite",
    "Scale",
    "Severity",
    "summarize",
    "SUITE_REGISTRY",
    "suite_spec",
    "SuiteContext",
    "SuiteName",
    "SuiteReport",
    "SuiteSpec",
    "SuiteSummary",
    "write_suite_report",
]
