#!/usr/bin/env python3
"""
Tests for Σ-cospans, 2-morphisms, the relation ≈ and vertical composition.
"""

import os
import sys

import pytest

# Add the parent directory to the path to import the laxfrac package
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from laxfrac.errors import BoundaryError, Decision, PreconditionError
from laxfrac.lax_fractions import LaxFractions
from laxfrac.models.category_model import FiniteCategorySpec, load_cyclic_model, load_trivial_model
from laxfrac.models.pos_model import PosModel
from laxfrac.models.posets import FinitePoset, MonotoneMap
from laxfrac.two_cat_core import TwoCell


class TestCospans:
    """1-cells of the localisation over posets"""

    def setup_method(self):
        self.engine = LaxFractions(PosModel(universe_size=2), witness_bound=4, ext_bound=4, apex_bound=2)
        self.point = FinitePoset.point()
        self.chain = FinitePoset.chain(2)
        self.bottom = MonotoneMap(self.point, self.chain, [0])
        self.collapse = MonotoneMap(self.chain, self.point, [0, 0])
        self.id_point = MonotoneMap.identity(self.point)
        self.id_chain = MonotoneMap.identity(self.chain)

    @pytest.mark.unit
    def test_right_leg_must_be_in_sigma(self):
        with pytest.raises(PreconditionError):
            self.engine.cospan(self.id_point, self.collapse)

    @pytest.mark.unit
    def test_legs_must_meet(self):
        with pytest.raises(BoundaryError):
            self.engine.cospan(self.id_point, self.id_chain)

    @pytest.mark.unit
    def test_cospan_endpoints(self):
        c = self.engine.cospan(self.bottom, self.id_chain)
        assert (c.source, c.apex, c.target) == (self.point, self.chain, self.chain)

    @pytest.mark.unit
    def test_identity_cospans_act_strictly(self):
        c = self.engine.cospan(self.bottom, self.id_chain)
        assert self.engine.compose_cospans(self.engine.identity_cospan(self.chain), c) == c
        assert self.engine.compose_cospans(c, self.engine.identity_cospan(self.point)) == c
        left, right = self.engine.unitors(c)
        assert left == right == self.engine.identity_two_cell(c)

    @pytest.mark.unit
    def test_composition_needs_matching_ends(self):
        c = self.engine.cospan(self.bottom, self.id_chain)
        with pytest.raises(BoundaryError):
            self.engine.compose_cospans(c, c)

    @pytest.mark.unit
    def test_enumerated_cospans_have_sigma_right_legs(self):
        cospans = self.engine.cospans_between(self.point, self.point)
        assert cospans
        assert all(c.r.is_embedding() for c in cospans)
        assert self.engine.identity_cospan(self.point) in cospans


class TestEquivalence:
    """≈ between parallel 2-morphisms"""

    def setup_method(self):
        self.engine = LaxFractions(PosModel(universe_size=2), witness_bound=4, ext_bound=4, apex_bound=2)
        self.point = FinitePoset.point()
        self.chain = FinitePoset.chain(2)
        self.bottom = MonotoneMap(self.point, self.chain, [0])
        self.c = self.engine.identity_cospan(self.point)
        self.identity = self.engine.identity_two_morphism(self.c)

    @pytest.mark.unit
    def test_identity_two_morphism_is_valid(self):
        assert self.engine.validate_two_morphism(self.identity)

    @pytest.mark.unit
    def test_reflexivity(self):
        verdict = self.engine.are_equivalent(self.identity, self.identity)
        assert verdict.decision is Decision.YES
        assert verdict.method == "reflexivity"

    @pytest.mark.unit
    def test_extension_is_equivalent(self):
        extended = self.engine.extend_by(self.identity, self.bottom)
        assert extended.x3 == self.bottom
        for method in ("auto", "search"):
            assert self.engine.are_equivalent(self.identity, extended, method=method)
            assert self.engine.are_equivalent(extended, self.identity, method=method)

    @pytest.mark.unit
    def test_invalid_two_morphism(self):
        collapse = MonotoneMap(self.chain, self.point, [0, 0])
        with pytest.raises(PreconditionError):
            self.engine.two_morphism(self.c, self.c, self.bottom, self.bottom, collapse)

    @pytest.mark.unit
    def test_identity_class_is_invertible(self):
        decision, inverse = self.engine.invert_class(self.engine.identity_two_cell(self.c))
        assert decision is Decision.YES
        assert inverse is not None

    @pytest.mark.unit
    def test_vertical_units(self):
        cell = self.engine.cls(self.engine.extend_by(self.identity, self.bottom))
        unit = self.engine.identity_two_cell(self.c)
        assert self.engine.same_class(self.engine.vcompose(unit, cell), cell)
        assert self.engine.same_class(self.engine.vcompose(cell, unit), cell)

    @pytest.mark.unit
    def test_non_parallel_comparison_raises(self):
        other = self.engine.identity_two_morphism(self.engine.identity_cospan(self.chain))
        with pytest.raises(BoundaryError):
            self.engine.are_equivalent(self.identity, other)


@pytest.mark.unit
class TestHomCategoriesOfCategories:
    """Hom-categories over the category with a single Σ-arrow s: A → B"""

    def setup_method(self):
        model = load_trivial_model(FiniteCategorySpec(name="arrow", objects=["A", "B"], morphisms={"s": ("A", "B")},
                                                      sigma=["id_A", "id_B", "s"]))
        self.engine = LaxFractions(model, witness_bound=2, ext_bound=2, apex_bound=2)

    def test_hom_from_b_to_a(self):
        hom = self.engine.hom_category("B", "A")
        assert [(c.f, c.r) for c in hom.objects] == [("id_B", "s")]
        assert len(hom.hom(0, 0)) == 1

    def test_endo_hom_of_a_is_connected(self):
        hom = self.engine.hom_category("A", "A")
        assert {(c.f, c.r) for c in hom.objects} == {("id_A", "id_A"), ("s", "s")}
        assert hom.is_preorder()
        assert hom.undetermined == 0
        assert all(hom.hom(i, j) for i in range(2) for j in range(2))

    def test_composite_of_fraction_and_inverse(self):
        forward = self.engine.cospan("s", "id_B")
        backward = self.engine.cospan("id_B", "s")
        composite = self.engine.compose_cospans(backward, forward)
        assert (composite.f, composite.r) == ("s", "s")


def loop(label):
    return TwoCell("id_A", "id_A", label)


@pytest.mark.unit
class TestCyclicTwoCells:
    """2-morphisms over A -s-> B with Z/3 2-cells and whiskering after s doubling labels"""

    def setup_method(self):
        model = load_cyclic_model(FiniteCategorySpec(name="arrow-z3", objects=["A", "B"], morphisms={"s": ("A", "B")},
                                                     sigma=["id_A", "id_B", "s"], cells=3, weights={"s": 2}))
        self.engine = LaxFractions(model, witness_bound=2, ext_bound=2, apex_bound=2)
        self.c = self.engine.identity_cospan("A")

    def tm(self, alpha, delta1, delta2):
        return self.engine.two_morphism(self.c, self.c, "id_A", "id_A", "id_A",
                                        loop(alpha), loop(delta1), loop(delta2))

    def test_vertical_composite_collects_the_comparison_cell(self):
        composite = self.engine.vcompose(self.engine.cls(self.tm(1, 2, 0)), self.engine.cls(self.tm(1, 0, 0)))
        tm = composite.representative
        assert (tm.x1, tm.x2, tm.x3) == ("id_A", "id_A", "id_A")
        assert (tm.alpha, tm.delta1, tm.delta2) == (loop(1), loop(0), loop(0))

    def test_extension_along_s_doubles_labels(self):
        extended = self.engine.extend_by(self.tm(1, 2, 0), "s")
        assert (extended.x1, extended.x2, extended.x3) == ("s", "s", "s")
        assert extended.alpha == TwoCell("s", "s", 2)
        assert (extended.delta1, extended.delta2) == (TwoCell("s", "s", 1), TwoCell("s", "s", 0))

    def test_extension_is_equivalent(self):
        tm = self.tm(1, 2, 0)
        result = self.engine.are_equivalent(tm, self.engine.extend_by(tm, "s"))
        assert result.decision is Decision.YES
        assert result.method == "rule4"

    def test_distinct_labels_are_not_equivalent(self):
        result = self.engine.are_equivalent(self.tm(1, 0, 0), self.tm(2, 0, 0))
        assert result.decision is Decision.NO

    def test_endo_hom_set_has_one_class_per_label(self):
        hom = self.engine.hom_category("A", "A")
        assert hom.objects[0] == self.c
        assert len(hom.hom(0, 0)) == 3
        assert not hom.is_preorder()
