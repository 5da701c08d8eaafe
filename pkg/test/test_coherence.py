#!/usr/bin/env python3
"""
Tests for the check records produced by the verification layer.
"""

import os
import sys

import pytest

# Add the parent directory to the path to import the laxfrac package
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from laxfrac.coherence import (CoherenceChecker, Tally, axiom_records, combine, compose_record, gz_records,
                               hom_record, lari_record, two_cell_record)
from laxfrac.config import sample_counts
from laxfrac.errors import BoundExhausted, Decision, PreconditionError
from laxfrac.lax_fractions import LaxFractions
from laxfrac.models.category_model import FiniteCategorySpec, load_trivial_model
from laxfrac.models.pos_model import PosModel


def category_engine(name, objects, morphisms, sigma):
    model = load_trivial_model(FiniteCategorySpec(name=name, objects=objects, morphisms=morphisms, sigma=sigma))
    return LaxFractions(model, witness_bound=2, ext_bound=2, apex_bound=2)


def arrow_engine():
    return category_engine("arrow", ["A", "B"], {"s": ("A", "B")}, ["id_A", "id_B", "s"])


@pytest.mark.unit
class TestTally:
    """Verdict bookkeeping"""

    def test_combine(self):
        assert combine() is Decision.YES
        assert combine(Decision.YES, Decision.UNDETERMINED) is Decision.UNDETERMINED
        assert combine(Decision.UNDETERMINED, Decision.NO) is Decision.NO

    def test_booleans_and_decisions(self):
        tally = Tally("vertical_units")
        tally.run("first", lambda: True)
        tally.run("second", lambda: Decision.UNDETERMINED)
        record = tally.record()
        assert record.instances == 2
        assert record.verdict == "undetermined"
        assert record.anchor == "Prop: identity 2-cells act as identities"

    def test_exhaustion_is_not_a_failure(self):
        def exhausted():
            raise BoundExhausted("no witness", 2)

        tally = Tally("axiom_square")
        tally.run("span", exhausted)
        record = tally.record()
        assert record.verdict == "exhausted"
        assert record.failures == []
        assert record.details["exhausted"] == 1

    def test_engine_errors_are_failures(self):
        def broken():
            raise PreconditionError("not a Σ-object")

        tally = Tally("unitors")
        tally.run("unitors", broken)
        record = tally.record()
        assert record.verdict == "fail"
        assert record.failures == ["unitors: not a Σ-object"]

    def test_unknown_check_uses_its_name_as_anchor(self):
        assert Tally("something_else").record().anchor == "something_else"


@pytest.mark.unit
class TestModelRecords:
    """Axiom and classical-comparison records"""

    def test_axiom_records_on_the_arrow_category(self):
        records = axiom_records(arrow_engine().model, 1, 2)
        assert [r.name for r in records] == [
            "two_category_laws", "axiom_identity", "axiom_vertical_repletion", "axiom_horizontal_repletion",
            "axiom_composition", "axiom_square", "axiom_equi_insertion", "axiom_equification"]
        assert all(r.passed for r in records), [r.failures for r in records]
        assert records[5].anchor == "Def: left calculus of lax fractions, Square"

    def test_gz_records_on_the_arrow_category(self):
        records = gz_records(arrow_engine())
        assert [r.name for r in records] == ["classical_axioms", "gz_comparison"]
        assert all(r.passed for r in records)
        assert records[1].instances == 4
        assert records[1].details["homs"]["B->A"] == {"components": 1, "fraction_classes": 1}

    def test_gz_records_name_the_violated_axiom(self):
        engine = category_engine("non-ore", ["A", "B", "C"], {"s": ("A", "B"), "g": ("A", "C")},
                                 ["id_A", "id_B", "id_C", "s"])
        (record,) = gz_records(engine)
        assert record.verdict == "fail"
        assert record.details["axiom"] == "ore"

    def test_gz_records_need_trivial_two_cells(self):
        (record,) = gz_records(LaxFractions(PosModel(universe_size=1), 2, 2, 2))
        assert record.verdict == "fail"

    def test_lari_record(self):
        record = lari_record(arrow_engine(), 1)
        assert record.name == "lari_triangles"
        assert record.instances == 3
        assert record.passed


@pytest.mark.unit
class TestQueryRecords:
    """Records answering single queries"""

    def setup_method(self):
        self.engine = arrow_engine()

    def test_hom_record(self):
        record = hom_record(self.engine, "B", "A")
        assert record.passed
        assert record.details["cospans"] == ["('id_B', 's')"]
        assert record.details["preorder"] is True

    def test_compose_record(self):
        forward = self.engine.cospan("s", "id_B")
        backward = self.engine.cospan("id_B", "s")
        record = compose_record(self.engine, [forward, backward])
        assert record.passed
        assert record.details["composite"] == "('s', 's')"

    def test_compose_record_with_unchained_cospans(self):
        forward = self.engine.cospan("s", "id_B")
        record = compose_record(self.engine, [forward, forward])
        assert record.verdict == "fail"
        assert record.details["composite"] is None

    def test_two_cell_record(self):
        tm = self.engine.identity_two_morphism(self.engine.identity_cospan("A"))
        record = two_cell_record(self.engine, tm, tm)
        assert record.passed
        assert record.details["decision"] == "yes"
        assert record.details["method"] == "reflexivity"


class TestCoherenceChecker:
    """Sampled bicategory checks"""

    @pytest.mark.unit
    def test_same_seed_same_records(self):
        first = CoherenceChecker(arrow_engine(), seed=3, sample_size=2).check_vertical()
        second = CoherenceChecker(arrow_engine(), seed=3, sample_size=2).check_vertical()
        assert [r.model_dump() for r in first] == [r.model_dump() for r in second]

    @pytest.mark.slow
    def test_arrow_category_is_coherent(self):
        records = CoherenceChecker(arrow_engine(), seed=0, sample_size=2).run_all()
        assert records[0].name == "equivalence_relation"
        for record in records:
            assert record.verdict in ("pass", "undetermined"), (record.name, record.failures[:3])

    @pytest.mark.unit
    def test_groups_draw_their_own_counts(self):
        checker = CoherenceChecker(arrow_engine(), seed=0, sample_size=1, samples={"vertical": 3})
        records = {record.name: record for record in checker.check_vertical()}
        assert records["vertical_associativity"].instances == 3
        assert records["vertical_associativity"].details["sample_size"] == 3
        extension = checker.check_extension_equivalence()
        assert extension.details["sample_size"] == 1

    @pytest.mark.unit
    def test_every_draw_checks_one_transitivity_triple(self):
        record = CoherenceChecker(arrow_engine(), seed=1, sample_size=5).check_equivalence_relation()
        assert record.details["transitivity_triples"] == 5
        assert record.verdict in ("pass", "undetermined")

    @pytest.mark.slow
    def test_configured_counts_reach_acceptance_scale(self):
        checker = CoherenceChecker(LaxFractions(PosModel(universe_size=1), 2, 2, 2), seed=0, samples=sample_counts())
        equivalence = checker.check_equivalence_relation()
        assert equivalence.details["transitivity_triples"] >= 10_000
        assert equivalence.instances >= 10_000
        horizontal = {record.name: record for record in checker.check_horizontal()}
        assert horizontal["horizontal_identities"].instances >= 1_000
        assert horizontal["interchange"].instances >= 1_000
        bicategory = {record.name: record for record in checker.check_bicategory()}
        assert bicategory["pentagon"].instances >= 500
        assert bicategory["triangle"].instances >= 500
