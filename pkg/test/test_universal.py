#!/usr/bin/env python3
"""
Tests for adjunctions, Beck-Chevalley squares and the canonical functor P.
"""

import os
import sys

import pytest

# Add the parent directory to the path to import the laxfrac package
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from laxfrac.errors import Decision, NotFound, PreconditionError
from laxfrac.lax_fractions import LaxFractions
from laxfrac.models.category_model import FiniteCategorySpec, load_trivial_model
from laxfrac.models.pos_model import PosModel
from laxfrac.models.posets import FinitePoset, MonotoneMap
from laxfrac.sigma_calculus import unit_square
from laxfrac.universal import (apply_p, check_localized_triangles, find_right_adjoint, is_beck_chevalley, is_lari,
                               lari_in_localization, verify_bc_image)


@pytest.mark.unit
class TestAdjunctionsInPos:
    """Laris among monotone maps"""

    def setup_method(self):
        self.model = PosModel(universe_size=2)
        self.point = FinitePoset.point()
        self.chain = FinitePoset.chain(2)
        self.antichain = FinitePoset.discrete(2)
        self.bottom = MonotoneMap(self.point, self.chain, [0])
        self.top = MonotoneMap(self.point, self.chain, [1])
        self.collapse = MonotoneMap(self.chain, self.point, [0, 0])

    def test_bottom_inclusion_is_a_lari(self):
        assert is_lari(self.model, self.bottom)
        adj = find_right_adjoint(self.model, self.bottom, lari=True)
        assert adj.right == self.collapse

    def test_top_inclusion_is_not_a_lari(self):
        assert not is_lari(self.model, self.top)

    def test_collapse_has_a_right_adjoint_but_is_not_a_lari(self):
        adj = find_right_adjoint(self.model, self.collapse)
        assert adj.right == self.top
        assert not is_lari(self.model, self.collapse)
        with pytest.raises(NotFound):
            find_right_adjoint(self.model, self.collapse, lari=True)

    def test_is_lari_agrees_with_the_adjoint_search(self):
        objects = self.model.objects()
        for f in [f for a in objects for b in objects for f in self.model.one_cells(a, b)]:
            try:
                find_right_adjoint(self.model, f, lari=True)
                found = True
            except NotFound:
                found = False
            assert is_lari(self.model, f) is found, f

    def test_unit_square_of_a_lari_is_beck_chevalley(self):
        assert is_beck_chevalley(self.model, unit_square(self.model, self.bottom))

    def test_beck_chevalley_needs_lari_edges(self):
        pick_a = MonotoneMap(self.point, self.antichain, [0])
        with pytest.raises(PreconditionError):
            is_beck_chevalley(self.model, unit_square(self.model, pick_a))


@pytest.mark.unit
class TestCanonicalFunctor:
    """P and the localised adjunctions over the arrow category"""

    def setup_method(self):
        model = load_trivial_model(FiniteCategorySpec(name="arrow", objects=["A", "B"], morphisms={"s": ("A", "B")},
                                                      sigma=["id_A", "id_B", "s"]))
        self.engine = LaxFractions(model, witness_bound=2, ext_bound=2, apex_bound=2)

    def test_p_on_objects_and_one_cells(self):
        assert apply_p(self.engine, "A") == "A"
        image = apply_p(self.engine, "s")
        assert (image.f, image.r) == ("s", "id_B")

    def test_p_on_identity_two_cells(self):
        cell = apply_p(self.engine, self.engine.model.id2("s"))
        assert cell == self.engine.identity_two_cell(apply_p(self.engine, "s"))

    def test_sigma_objects_become_laris(self):
        for s in ("id_A", "s"):
            adj = lari_in_localization(self.engine, s)
            assert (adj.right.f, adj.right.r) == (self.engine.model.id1(self.engine.model.cod(s)), s)
            assert check_localized_triangles(self.engine, adj).passed

    def test_images_of_sigma_squares_are_beck_chevalley(self):
        sq = self.engine.canonical_square("s", "s")
        assert verify_bc_image(self.engine, sq) is Decision.YES

    def test_non_sigma_object_is_rejected(self):
        model = load_trivial_model(FiniteCategorySpec(name="identities", objects=["A", "B"],
                                                      morphisms={"f": ("A", "B")}, sigma=["id_A", "id_B"]))
        with pytest.raises(PreconditionError):
            lari_in_localization(LaxFractions(model, 2, 2, 2), "f")
