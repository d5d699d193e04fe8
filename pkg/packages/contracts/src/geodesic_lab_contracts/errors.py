from __future__ import annotations


class ContractsError(RuntimeError):
    """Base error for contracts package failures"""


class ContractsResourceError(ContractsError):
    """
    Raised when a required contract resource file cannot be located or read.

    A RuntimeError rather than FileNotFoundError: a missing schema means the
    contracts wheel is broken, not that a user path is wrong.
    """


class SpaceDocumentValidationError(ContractsError):
    """Space document did not validate against the shipped JSON schema"""


class SuiteReportValidationError(ContractsError):
    """Suite report did not validate against the shipped JSON schema"""
