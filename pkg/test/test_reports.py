#!/usr/bin/env python3
"""
Tests for run reports and their JSON and Markdown renderings.
"""

import json
import os
import sys

import pytest

# Add the parent directory to the path to import the laxfrac package
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from laxfrac.reports import CheckRecord, RunReport, render, verdict_of


def record(name, verdict, failures=()):
    return CheckRecord(name=name, anchor=f"anchor of {name}", verdict=verdict, instances=2,
                       failures=list(failures), details={"seed": 0})


@pytest.mark.unit
class TestVerdicts:

    def test_failures_dominate(self):
        assert verdict_of(["x"], undetermined=1, exhausted=1) == "fail"
        assert verdict_of([], undetermined=1, exhausted=1) == "exhausted"
        assert verdict_of([], undetermined=1) == "undetermined"
        assert verdict_of([]) == "pass"

    def test_status_requires_every_record_to_pass(self):
        report = RunReport(command="check-axioms", model="arrow",
                           records=[record("a", "pass"), record("b", "undetermined")]).finalize()
        assert report.status == "fail"
        report = RunReport(command="check-axioms", model="arrow", records=[record("a", "pass")]).finalize()
        assert report.status == "pass"

    def test_unknown_verdict_is_rejected(self):
        with pytest.raises(ValueError):
            record("a", "maybe")


@pytest.mark.unit
class TestRendering:
    """JSON and Markdown reports"""

    def setup_method(self):
        self.report = RunReport(command="verify-coherence", model="arrow", config={"seed": 0, "sample_size": 2},
                                records=[record("vertical_units", "pass"),
                                         record("pentagon", "fail", ["pentagon at (s, id_B)"])]).finalize()

    def test_json_is_deterministic(self):
        assert render(self.report) == render(self.report.model_copy(deep=True))
        data = json.loads(render(self.report, "json"))
        assert data["status"] == "fail"
        assert [r["name"] for r in data["records"]] == ["vertical_units", "pentagon"]

    def test_markdown_has_anchors_and_failures(self):
        text = render(self.report, "markdown")
        assert text.startswith("# Verification Report: verify-coherence on arrow")
        assert "<a id='pentagon'></a>" in text
        assert "- [vertical_units](#vertical_units)" in text
        assert "anchor of pentagon" in text
        assert "1. pentagon at (s, id_B)" in text
        assert "- sample_size: 2" in text
