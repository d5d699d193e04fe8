from __future__ import annotations

import json
from functools import lru_cache
from typing import Any, Iterable

from jsonschema import Draft202012Validator

from .errors import SpaceDocumentValidationError, SuiteReportValidationError
from .resources import space_document_schema, suite_report_schema


@lru_cache(maxsize=1)
def space_document_validator() -> Draft202012Validator:
    return Draft202012Validator(space_document_schema())


@lru_cache(maxsize=1)
def suite_report_validator() -> Draft202012Validator:
    return Draft202012Validator(suite_report_schema())


def format_errors(errors: Iterable[Any]) -> str:
    lines: list[str] = []
    for e in errors:
        path = (
            ".".join(str(p) for p in e.path) if getattr(e, "path", None) else "<root>"
        )
        lines.append(f"- {path}: {e.message}")
    return "\n".join(lines)


def _sorted_errors(v: Draft202012Validator, obj: dict[str, Any]) -> list[Any]:
    return sorted(v.iter_errors(obj), key=lambda e: [str(p) for p in e.path])


def validate_space_document_dict(obj: dict[str, Any]) -> None:
    """
    Validate a space document object against the shipped JSON schema.
    Raises SpaceDocumentValidationError listing every violation.
    """
    errs = _sorted_errors(space_document_validator(), obj)
    if errs:
        raise SpaceDocumentValidationError(
            "Space document validation failed:\n" + format_errors(errs)
        )


def validate_space_document_json(raw: str | bytes) -> dict[str, Any]:
    if isinstance(raw, bytes):
        raw = raw.decode("utf-8")

    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as e:
        raise SpaceDocumentValidationError(
            f"Space document is not valid JSON: {e}"
        ) from e

    if not isinstance(obj, dict):
        raise SpaceDocumentValidationError(
            f"Space document must be a JSON object, got {type(obj).__name__}"
        )

    validate_space_document_dict(obj)
    return obj


def validate_suite_report_dict(obj: dict[str, Any]) -> None:
    errs = _sorted_errors(suite_report_validator(), obj)
    if errs:
        raise SuiteReportValidationError(
            "Suite report validation failed:\n" + format_errors(errs)
        )
