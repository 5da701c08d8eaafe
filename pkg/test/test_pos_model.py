#!/usr/bin/env python3
"""
Tests for the order-enriched model: embeddings, Σ-squares and witness providers.
"""

import os
import sys

import pytest

# Add the parent directory to the path to import the laxfrac package
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from laxfrac.errors import BoundExhausted, NotASquare, PreconditionError
from laxfrac.models.pos_model import (PosModel, all_pos_squares, commutes, pos_equi_insertion, pos_is_embedding,
                                      pos_square_in_sigma, pos_witness_square, pushout_square,
                                      sigma_condition_elementwise, sigma_condition_lower_sets)
from laxfrac.models.posets import FinitePoset, MonotoneMap
from laxfrac.two_cat_core import ArrowCatMorphism, TwoCell, check_two_category_laws


def square(top, bottom, left, right):
    return ArrowCatMorphism(top, bottom, left, right, TwoCell(bottom.after(left), right.after(top)))


class TestPosSquares:
    """Σ-membership of squares of monotone maps"""

    def setup_method(self):
        self.point = FinitePoset.point()
        self.chain = FinitePoset.chain(2)
        self.bottom = MonotoneMap(self.point, self.chain, [0])
        self.top = MonotoneMap(self.point, self.chain, [1])
        self.id_point = MonotoneMap.identity(self.point)
        self.id_chain = MonotoneMap.identity(self.chain)

    @pytest.mark.unit
    def test_embedding_examples(self):
        assert pos_is_embedding(self.id_chain)
        assert pos_is_embedding(self.bottom)
        assert not pos_is_embedding(MonotoneMap(self.chain, self.point, [0, 0]))

    @pytest.mark.unit
    def test_bottom_inclusion_square_is_in_sigma(self):
        sq = square(self.bottom, self.bottom, self.id_point, self.id_chain)
        assert pos_square_in_sigma(sq)
        assert pos_square_in_sigma(sq, method="lower_sets")

    @pytest.mark.unit
    def test_top_inclusion_square_is_not_in_sigma(self):
        # y = 0, z = 0 has n(z) <= v(y) but no x with m(x) <= y
        sq = square(self.top, self.id_chain, self.top, self.id_chain)
        assert not pos_square_in_sigma(sq)
        assert not pos_square_in_sigma(sq, method="lower_sets")

    @pytest.mark.unit
    def test_identity_square_is_in_sigma(self):
        assert pos_square_in_sigma(square(self.id_chain, self.id_chain, self.id_chain, self.id_chain))

    @pytest.mark.unit
    def test_non_commuting_square_raises(self):
        sq = square(self.bottom, self.bottom, self.id_point, MonotoneMap(self.chain, self.chain, [1, 1]))
        assert not commutes(sq)
        with pytest.raises(NotASquare):
            pos_square_in_sigma(sq)

    @pytest.mark.unit
    def test_unknown_method(self):
        with pytest.raises(ValueError):
            pos_square_in_sigma(square(self.id_chain, self.id_chain, self.id_chain, self.id_chain), method="x")

    @pytest.mark.slow
    def test_elementwise_and_lower_set_conditions_agree(self):
        squares = all_pos_squares(PosModel(), 2, sigma_only=False)
        assert squares
        for sq in squares:
            assert sigma_condition_elementwise(sq) == sigma_condition_lower_sets(sq), sq

    @pytest.mark.unit
    def test_pushout_square_is_in_sigma(self):
        sq = pushout_square(self.bottom, self.id_point)
        assert sq.top == self.bottom and sq.left == self.id_point
        assert pos_square_in_sigma(sq)


class TestPosWitnesses:
    """Square and Equi-insertion witnesses"""

    def setup_method(self):
        self.point = FinitePoset.point()
        self.chain = FinitePoset.chain(2)
        self.bottom = MonotoneMap(self.point, self.chain, [0])
        self.top = MonotoneMap(self.point, self.chain, [1])
        self.id_point = MonotoneMap.identity(self.point)
        self.id_chain = MonotoneMap.identity(self.chain)

    @pytest.mark.unit
    def test_witness_square_for_identity(self):
        sq = pos_witness_square(self.id_chain, self.id_chain, bound=2)
        assert sq.top == self.id_chain and sq.left == self.id_chain
        assert pos_square_in_sigma(sq)

    @pytest.mark.unit
    def test_witness_square_for_identity_top_is_literal(self):
        for use_shortcut in (True, False):
            sq = pos_witness_square(self.id_point, self.bottom, bound=2, use_shortcut=use_shortcut)
            assert (sq.top, sq.left, sq.right, sq.bottom) == (self.id_point, self.bottom, self.bottom, self.id_chain)
            assert sq.delta == TwoCell(self.bottom, self.bottom)
            assert sq.bottom.cod.elements == self.chain.elements

    @pytest.mark.unit
    def test_witness_square_for_identity_top_respects_bound(self):
        with pytest.raises(BoundExhausted):
            pos_witness_square(self.id_point, self.bottom, bound=1)

    @pytest.mark.unit
    def test_witness_square_for_inclusion(self):
        for use_shortcut in (True, False):
            sq = pos_witness_square(self.bottom, self.id_point, bound=3, use_shortcut=use_shortcut)
            assert sq.top == self.bottom and sq.left == self.id_point
            assert pos_square_in_sigma(sq)

    @pytest.mark.unit
    def test_witness_square_bound_zero_is_exhausted(self):
        with pytest.raises(BoundExhausted) as excinfo:
            pos_witness_square(self.bottom, self.id_point, bound=0)
        assert excinfo.value.bound == 0

    @pytest.mark.unit
    def test_witness_square_needs_embedding(self):
        collapse = MonotoneMap(self.chain, self.point, [0, 0])
        with pytest.raises(PreconditionError):
            pos_witness_square(collapse, self.id_chain, bound=2)

    @pytest.mark.unit
    def test_equi_insertion_on_identity_square(self):
        sq = square(self.id_chain, self.id_chain, self.id_chain, self.id_chain)
        d, alpha_prime = pos_equi_insertion(sq, self.id_chain, TwoCell(self.id_chain, self.id_chain), bound=2)
        assert d == self.id_chain
        assert alpha_prime == TwoCell(self.id_chain, self.id_chain)

    @pytest.mark.unit
    def test_equi_insertion_with_strict_inequality(self):
        sq = square(self.id_point, self.id_chain, self.bottom, self.bottom)
        d, alpha_prime = pos_equi_insertion(sq, self.top, TwoCell(self.bottom, self.top), bound=2)
        assert d.after(self.bottom).pointwise_le(d.after(self.top))
        assert alpha_prime.source == d.after(self.bottom)

    @pytest.mark.unit
    def test_equi_insertion_rejects_wrong_two_cell(self):
        sq = square(self.id_point, self.id_chain, self.bottom, self.bottom)
        with pytest.raises(PreconditionError):
            pos_equi_insertion(sq, self.bottom, TwoCell(self.top, self.bottom), bound=2)


class TestPosModel:
    """The model as a 2-category"""

    def setup_method(self):
        self.model = PosModel(universe_size=2)

    @pytest.mark.unit
    def test_objects_are_small_posets(self):
        assert [p.n for p in self.model.objects()] == [0, 1, 2, 2]

    @pytest.mark.slow
    def test_two_category_laws(self):
        assert check_two_category_laws(self.model, 2) == []

    @pytest.mark.unit
    def test_right_adjoints_are_unique(self):
        for a in self.model.objects():
            for b in self.model.objects():
                for f in self.model.one_cells(a, b):
                    assert len(self.model.lower_adjoint_pairs(f)) <= 1

    @pytest.mark.unit
    def test_completeness_bound_respects_search_cap(self):
        chain = FinitePoset.chain(2)
        assert self.model.completeness_bound(chain, chain) == 4
        assert self.model.completeness_bound(chain, chain, chain) is None
