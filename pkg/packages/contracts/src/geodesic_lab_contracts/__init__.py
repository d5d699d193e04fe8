from __future__ import annotations

from .errors import (
    ContractsError,
    ContractsResourceError,
    SpaceDocumentValidationError,
    SuiteReportValidationError,
)
from .hashes import (
    CONTRACT_RESOURCE_PATHS,
    compute_contract_fingerprint,
    compute_resource_hashes,
    read_bytes,
    sha256_hex,
)
from .resources import (
    SCHEMA_VERSION_REL,
    SPACE_DOCUMENT_SCHEMA_REL,
    SUITE_REPORT_SCHEMA_REL,
    read_json,
    read_text,
    schema_version_int,
    schema_version_text,
    space_document_schema,
    suite_report_schema,
)
from .validation import (
    validate_space_document_dict,
    validate_space_document_json,
    validate_suite_report_dict,
)
from .version import (
    CONTRACTS_DIST_VERSION,
    ContractVersionInfo,
    get_contract_version_info,
)

__all__ = [
    "ContractsError",
    "ContractsResourceError",
    "SpaceDocumentValidationError",
    "SuiteReportValidationError",
    "read_text",
    "read_bytes",
    "read_json",
    "space_document_schema",
    "suite_report_schema",
    "schema_version_text",
    "schema_version_int",
    "SPACE_DOCUMENT_SCHEMA_REL",
    "SUITE_REPORT_SCHEMA_REL",
    "SCHEMA_VERSION_REL",
    "validate_space_document_dict",
    "validate_space_document_json",
    "validate_suite_report_dict",
    "CONTRACTS_DIST_VERSION",
    "ContractVersionInfo",
    "get_contract_version_info",
    "sha256_hex",
    "CONTRACT_RESOURCE_PATHS",
    "compute_resource_hashes",
    "compute_contract_fingerprint",
]
