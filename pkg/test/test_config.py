#!/usr/bin/env python3
"""
Tests for run configuration, bounds files and anchors.
"""

import os
import sys

import pytest

# Add the parent directory to the path to import the laxfrac package
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from laxfrac.config import (DEFAULT_BOUNDS, RunConfig, anchor_for, build_run_config, configs,
                            replace_env_placeholders, sample_counts)


@pytest.mark.unit
class TestRunConfig:
    """Bounds validation and precedence"""

    def test_defaults(self):
        config = build_run_config({"model": "m.json", "command": "hom"})
        assert config.report_config() == {k: configs["bounds"][k] for k in DEFAULT_BOUNDS}
        assert config.format == "json"
        assert config.args == {}

    def test_overrides_win(self):
        config = build_run_config({"model": "m.json", "command": "hom", "seed": 7, "apex_bound": None})
        assert config.seed == 7
        assert config.apex_bound == configs["bounds"]["apex_bound"]

    def test_witness_bound_above_search_cap(self):
        with pytest.raises(ValueError, match="max_search_size"):
            build_run_config({"model": "m.json", "command": "hom", "witness_bound": 9, "max_search_size": 4})

    def test_force_allows_large_witness_bound(self):
        config = build_run_config({"model": "m.json", "command": "hom", "witness_bound": 9,
                                   "max_search_size": 4, "force": True})
        assert config.witness_bound == 9

    def test_non_positive_bound(self):
        with pytest.raises(ValueError):
            RunConfig(model="m.json", command="hom", ext_bound=0)

    def test_unknown_command(self):
        with pytest.raises(ValueError):
            RunConfig(model="m.json", command="localise")

    def test_report_config_excludes_paths(self):
        config = RunConfig(model="m.json", command="check-axioms", out="report.json")
        assert "out" not in config.report_config()
        assert "model" not in config.report_config()


@pytest.mark.unit
class TestConfigFiles:
    """Placeholders and the anchor registry"""

    def test_env_placeholders(self, monkeypatch):
        monkeypatch.setenv("LAXFRAC_SEED", "11")
        replaced = replace_env_placeholders({"seed": "${LAXFRAC_SEED}", "nested": ["${LAXFRAC_SEED}", 3]})
        assert replaced == {"seed": "11", "nested": ["11", 3]}

    def test_missing_placeholder_is_kept(self, monkeypatch):
        monkeypatch.delenv("LAXFRAC_MISSING", raising=False)
        assert replace_env_placeholders("${LAXFRAC_MISSING}") == "${LAXFRAC_MISSING}"

    def test_anchor_for(self):
        assert anchor_for("vertical_well_defined") == "Prop: vertical composition well-defined"
        assert anchor_for("not_registered") == "not_registered"

    def test_sample_counts_per_check(self):
        config = build_run_config({"model": "m.json", "command": "verify-coherence"})
        assert config.samples["equivalence_relation"] == 10_000
        assert config.samples["horizontal"] == 1_000
        assert config.samples["bicategory"] == 500
        assert sample_counts() == config.samples

    def test_explicit_sample_size_replaces_counts(self):
        config = build_run_config({"model": "m.json", "command": "verify-coherence", "sample_size": 3})
        assert config.sample_size == 3
        assert config.samples == {}
