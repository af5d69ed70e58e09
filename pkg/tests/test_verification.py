"""Verification harness: structure, pass state, tamper sanity."""

from __future__ import annotations

import pytest

import zittersim.verification as verification
from zittersim.cli import main


def test_fast_suite_passes():
    report = verification.run_verification("fast")
    assert report.passed
    assert report.level == "fast"
    for check in report.checks:
        assert check.observed <= check.tolerance, check.name


def test_report_shape():
    report = verification.run_verification("fast")
    payload = report.to_dict()
    assert payload["passed"] is True
    names = [c["name"] for c in payload["checks"]]
    assert len(names) == len(set(names))
    for check in payload["checks"]:
        assert set(check) == {"name", "tolerance", "observed", "passed", "detail"}


def test_unknown_level_rejected():
    with pytest.raises(ValueError):
        verification.run_verification("paranoid")


def test_tampered_tolerance_fails(monkeypatch, capsys):
    # harness sanity: a zeroed tolerance must turn the run red
    monkeypatch.setattr(verification, "ENTROPY_IDENTITY_TOL", 0.0)
    report = verification.run_verification("fast")
    assert not report.passed
    assert main(["verify", "--level", "fast"]) == 1
    capsys.readouterr()
