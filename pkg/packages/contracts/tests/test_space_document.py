from __future__ import annotations

import json
from pathlib import Path

import pytest
from geodesic_lab_contracts import (
    SpaceDocumentValidationError,
    SuiteReportValidationError,
    get_contract_version_info,
    validate_space_document_json,
    validate_suite_report_dict,
)

FIX = Path(__file__).parent / "fixtures" / "space.valid.json"


def _fixture() -> dict:
    return json.loads(FIX.read_text(encoding="utf-8"))


def test_valid_space_document_fixture_passes():
    obj = validate_space_document_json(FIX.read_text(encoding="utf-8"))
    assert obj["format_version"] == 1
    assert obj["marks"]["Y"] == [0, 1]


def test_missing_y_rejected():
    bad = _fixture()
    bad["marks"].pop("Y")
    with pytest.raises(SpaceDocumentValidationError):
        validate_space_document_json(json.dumps(bad))


def test_unknown_key_rejected():
    bad = _fixture()
    bad["colour"] = "blue"
    with pytest.raises(SpaceDocumentValidationError) as ei:
        validate_space_document_json(json.dumps(bad))
    assert "colour" in str(ei.value)


def test_non_positive_weight_rejected():
    bad = _fixture()
    bad["edges"][0][2] = 0
    with pytest.raises(SpaceDocumentValidationError):
        validate_space_document_json(json.dumps(bad))


def test_wrong_format_version_rejected():
    bad = _fixture()
    bad["format_version"] = 2
    with pytest.raises(SpaceDocumentValidationError):
        validate_space_document_json(json.dumps(bad))


def test_non_object_rejected():
    with pytest.raises(SpaceDocumentValidationError):
        validate_space_document_json("[1, 2]")
    with pytest.raises(SpaceDocumentValidationError):
        validate_space_document_json(b"{not json")


def test_suite_report_schema_enforces_status():
    report = {
        "report_version": "1.0",
        "suite": "abel",
        "spaces": ["log_space"],
        "checks": [
            {
                "code": "ABEL_STEPS",
                "space": "log_space",
                "severity": "ERROR",
                "status": "pass",
                "message": "ok",
                "witness": None,
                "details": None,
            }
        ],
        "summary": {"passed": 1, "failed": 0, "expected_failures": 0, "warnings": 0},
        "config": {},
    }
    validate_suite_report_dict(report)

    report["checks"][0]["status"] = "maybe"
    with pytest.raises(SuiteReportValidationError):
        validate_suite_report_dict(report)


def test_contract_version_info_present():
    info = get_contract_version_info()
    assert len(info.fingerprint) == 64
    assert "schema/VERSION" in info.sha256
    assert info.to_dict()["schema_version"] == "1"
