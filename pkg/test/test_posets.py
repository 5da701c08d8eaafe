#!/usr/bin/env python3
"""
Tests for finite posets, monotone maps and lower-set lattices.

Usage: pytest test/test_posets.py
"""

import os
import sys

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

# Add the parent directory to the path to import the laxfrac package
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from laxfrac.errors import SpecError
from laxfrac.models.posets import (FinitePoset, LowerSetLattice, MonotoneMap, enumerate_monotone_maps,
                                   enumerate_posets, find_isomorphism, lower_set_functor_preserves,
                                   posets_up_to, quotient_preorder)

SMALL_POSETS = posets_up_to(3)


@pytest.mark.unit
class TestFinitePoset:
    """Construction and validation of finite posets"""

    def setup_method(self):
        self.chain = FinitePoset.chain(2)
        self.point = FinitePoset.point()

    def test_chain_order(self):
        assert self.chain.le(0, 1)
        assert not self.chain.le(1, 0)
        assert self.chain.cover_pairs == [(0, 1)]

    def test_rejects_non_transitive_relation(self):
        rel = np.eye(3, dtype=bool)
        rel[0, 1] = rel[1, 2] = True
        with pytest.raises(SpecError):
            FinitePoset(["a", "b", "c"], rel)

    def test_rejects_cycle(self):
        with pytest.raises(SpecError):
            FinitePoset.from_relation(["a", "b"], [("a", "b"), ("b", "a")])

    def test_from_relation_closes_transitively(self):
        poset = FinitePoset.from_relation(["a", "b", "c"], [("a", "b"), ("b", "c")])
        assert poset.le(poset.index("a"), poset.index("c"))

    def test_rejects_duplicate_names(self):
        with pytest.raises(SpecError):
            FinitePoset(["a", "a"], np.eye(2, dtype=bool))

    def test_empty_poset_is_admitted(self):
        empty = FinitePoset.empty()
        assert len(empty) == 0
        assert empty.lower_sets == [frozenset()]

    def test_equality_and_hash(self):
        assert FinitePoset.chain(2) == self.chain
        assert hash(FinitePoset.chain(2)) == hash(self.chain)
        assert FinitePoset.discrete(2) != self.chain

    def test_lower_sets_of_chain(self):
        assert self.chain.lower_sets == [frozenset(), frozenset({0}), frozenset({0, 1})]

    def test_unknown_element(self):
        with pytest.raises(SpecError):
            self.chain.index("z")


@pytest.mark.unit
class TestEnumeration:
    """Canonical enumeration of posets and monotone maps"""

    def test_isomorphism_class_counts(self):
        assert [len(enumerate_posets(n)) for n in range(5)] == [1, 1, 2, 5, 16]

    def test_representatives_are_pairwise_non_isomorphic(self):
        reps = enumerate_posets(3)
        for i, p in enumerate(reps):
            for q in reps[i + 1:]:
                assert find_isomorphism(p, q) is None

    def test_monotone_maps_from_chain_to_chain(self):
        chain = FinitePoset.chain(2)
        maps = enumerate_monotone_maps(chain, chain)
        assert [m.assignment for m in maps] == [(0, 0), (0, 1), (1, 1)]

    def test_no_maps_into_empty(self):
        assert enumerate_monotone_maps(FinitePoset.point(), FinitePoset.empty()) == []
        assert len(enumerate_monotone_maps(FinitePoset.empty(), FinitePoset.point())) == 1

    def test_quotient_preorder_collapses_cycle(self):
        rel = np.ones((2, 2), dtype=bool)
        quotient, cls_of = quotient_preorder(["a", "b"], rel)
        assert quotient.elements == ("a=b",)
        assert cls_of == [0, 0]

    def test_quotient_preorder_closes_generating_relation(self):
        rel = np.zeros((3, 3), dtype=bool)
        rel[0, 1] = rel[1, 0] = rel[1, 2] = True
        quotient, cls_of = quotient_preorder(["a", "b", "c"], rel)
        assert quotient.elements == ("a=b", "c")
        assert cls_of == [0, 0, 1]
        assert quotient.le(0, 1) and not quotient.le(1, 0)


@pytest.mark.unit
class TestMonotoneMap:
    """Monotone maps and their lower-set functors"""

    def setup_method(self):
        self.chain = FinitePoset.chain(2)
        self.point = FinitePoset.point()
        self.bottom = MonotoneMap(self.point, self.chain, [0])
        self.collapse = MonotoneMap(self.chain, self.point, [0, 0])

    def test_rejects_non_monotone(self):
        with pytest.raises(SpecError):
            MonotoneMap(self.chain, self.chain, [1, 0])

    def test_embedding_examples(self):
        assert MonotoneMap.identity(self.chain).is_embedding()
        assert self.bottom.is_embedding()
        assert not self.collapse.is_embedding()

    def test_composition(self):
        assert self.collapse.after(self.bottom) == MonotoneMap.identity(self.point)

    def test_from_names(self):
        top = MonotoneMap.from_names(self.point, self.chain, {"*": "1"})
        assert top.assignment == (1,)
        with pytest.raises(SpecError):
            MonotoneMap.from_names(self.chain, self.point, {"0": "*"})

    def test_pointwise_order(self):
        top = MonotoneMap(self.point, self.chain, [1])
        assert self.bottom.pointwise_le(top)
        assert not top.pointwise_le(self.bottom)

    def test_image_and_preimage(self):
        assert self.bottom.image_down({0}) == frozenset({0})
        assert self.bottom.preimage({1}) == frozenset()
        assert self.bottom.preimage({0, 1}) == frozenset({0})


@pytest.mark.property
class TestLowerSetProperties:
    """The lower-set machinery on every small poset"""

    @given(st.sampled_from(posets_up_to(4)))
    @settings(max_examples=30, deadline=None)
    def test_lower_sets_form_a_lattice(self, poset):
        lattice = LowerSetLattice(poset)
        assert lattice.is_lattice()
        assert all(poset.is_lower(s) for s in lattice.sets)
        lattice.as_poset()

    @given(st.sampled_from(SMALL_POSETS), st.sampled_from(SMALL_POSETS), st.data())
    @settings(max_examples=60, deadline=None)
    def test_lower_set_functors_preserve_unions_and_intersections(self, dom, cod, data):
        maps = enumerate_monotone_maps(dom, cod)
        assume(maps)
        f = data.draw(st.sampled_from(maps))
        assert lower_set_functor_preserves(f)

    @given(st.sampled_from(SMALL_POSETS), st.sampled_from(SMALL_POSETS), st.data())
    @settings(max_examples=60, deadline=None)
    def test_image_is_left_adjoint_to_preimage(self, dom, cod, data):
        maps = enumerate_monotone_maps(dom, cod)
        assume(maps)
        f = data.draw(st.sampled_from(maps))
        for lower in dom.lower_sets:
            for upper in cod.lower_sets:
                assert (f.image_down(lower) <= upper) == (lower <= f.preimage(upper))
