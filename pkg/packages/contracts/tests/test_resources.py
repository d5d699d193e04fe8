from __future__ import annotations

from geodesic_lab_contracts import (
    schema_version_int,
    space_document_schema,
    suite_report_schema,
)


def test_schema_version_is_int_ge_1():
    assert schema_version_int() >= 1


def test_space_document_schema_loads():
    s = space_document_schema()
    assert s["type"] == "object"
    assert s["additionalProperties"] is False
    assert "format_version" in s["required"]


def test_suite_report_schema_loads():
    s = suite_report_schema()
    assert "checks" in s["properties"]
