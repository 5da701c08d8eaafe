#!/usr/bin/env python3
"""
Tests for the command-line surface: commands, reports and exit codes.
"""

import json
import os
import sys

import pytest

# Add the parent directory to the path to import the laxfrac package
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from laxfrac.cli import EXIT_FAILED, EXIT_MODEL_ERROR, EXIT_OK, EXIT_USAGE, main

CORPUS = os.path.join(os.path.dirname(__file__), '..', 'corpus')


def corpus(name):
    return os.path.join(CORPUS, name)


class TestCommands:
    """Each command against the shipped corpus"""

    def setup_method(self):
        self.arrow = corpus("arrow.json")

    def invoke(self, tmp_path, model, command, *extra):
        out = tmp_path / "report.json"
        code = main(["--model", model, "--command", command, "--out", str(out), *extra])
        return code, json.loads(out.read_text(encoding="utf-8"))

    @pytest.mark.unit
    def test_compare_gz(self, tmp_path):
        code, report = self.invoke(tmp_path, self.arrow, "compare-gz")
        assert code == EXIT_OK
        assert report["status"] == "pass"
        assert report["model"] == "arrow"
        assert [r["name"] for r in report["records"]] == ["classical_axioms", "gz_comparison"]

    @pytest.mark.unit
    def test_compare_gz_without_ore_squares(self, tmp_path):
        code, report = self.invoke(tmp_path, corpus("non_ore.json"), "compare-gz")
        assert code == EXIT_FAILED
        assert report["records"][0]["details"]["axiom"] == "ore"

    @pytest.mark.unit
    def test_hom(self, tmp_path):
        code, report = self.invoke(tmp_path, self.arrow, "hom", "--args", '{"source": "B", "target": "A"}')
        assert code == EXIT_OK
        assert report["records"][0]["details"]["cospans"] == ["('id_B', 's')"]

    @pytest.mark.unit
    def test_compose(self, tmp_path):
        code, report = self.invoke(tmp_path, self.arrow, "compose",
                                   "--args", '{"cospans": [["s", "id_B"], ["id_B", "s"]]}')
        assert code == EXIT_OK
        assert report["records"][0]["details"]["composite"] == "('s', 's')"

    @pytest.mark.unit
    def test_two_cell_equal(self, tmp_path):
        args = {"source": ["id_A", "id_A"], "target": ["id_A", "id_A"],
                "first": {"x1": "id_A", "x2": "id_A", "x3": "id_A"},
                "second": {"x1": "id_A", "x2": "id_A", "x3": "id_A"}}
        code, report = self.invoke(tmp_path, self.arrow, "two-cell-equal", "--args", json.dumps(args))
        assert code == EXIT_OK
        assert report["records"][0]["details"]["decision"] == "yes"

    @pytest.mark.unit
    def test_check_axioms_on_small_posets(self, tmp_path):
        code, report = self.invoke(tmp_path, corpus("pos_small.json"), "check-axioms",
                                   "--universe-size", "1", "--witness-bound", "2")
        assert code == EXIT_OK
        assert report["config"]["universe_size"] == 1
        assert report["config"]["max_search_size"] == 4
        assert len(report["records"]) == 8

    @pytest.mark.unit
    def test_markdown_to_stdout(self, capsys):
        code = main(["--model", self.arrow, "--command", "compare-gz", "--format", "markdown"])
        assert code == EXIT_OK
        assert capsys.readouterr().out.startswith("# Verification Report: compare-gz on arrow")

    @pytest.mark.unit
    def test_reports_are_deterministic(self, tmp_path):
        first = tmp_path / "first.json"
        second = tmp_path / "second.json"
        for out in (first, second):
            assert main(["--model", self.arrow, "--command", "check-lari", "--seed", "5",
                         "--out", str(out)]) == EXIT_OK
        assert first.read_bytes() == second.read_bytes()


@pytest.mark.unit
class TestExitCodes:
    """Usage, bound and model-file errors"""

    def test_malformed_model_file(self):
        assert main(["--model", corpus("malformed_poset.json"), "--command", "check-axioms"]) == EXIT_MODEL_ERROR

    def test_witness_bound_above_search_cap(self):
        assert main(["--model", corpus("arrow.json"), "--command", "check-axioms",
                     "--witness-bound", "9"]) == EXIT_USAGE

    def test_force_allows_large_witness_bound(self, tmp_path):
        code = main(["--model", corpus("arrow.json"), "--command", "compare-gz", "--witness-bound", "9",
                     "--force", "--out", str(tmp_path / "report.json")])
        assert code == EXIT_OK

    def test_unknown_command(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["--model", corpus("arrow.json"), "--command", "localise"])
        assert excinfo.value.code == EXIT_USAGE

    def test_invalid_args_json(self):
        assert main(["--model", corpus("arrow.json"), "--command", "hom", "--args", "{source"]) == EXIT_USAGE
        assert main(["--model", corpus("arrow.json"), "--command", "hom", "--args", "[1, 2]"]) == EXIT_USAGE

    def test_unknown_cell_in_args(self):
        assert main(["--model", corpus("arrow.json"), "--command", "compose",
                     "--args", '{"cospans": [["t", "id_B"]]}']) == EXIT_USAGE
