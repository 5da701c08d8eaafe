#!/usr/bin/env python3
"""
Tests for finite categories viewed as 2-categories with trivial or cyclic 2-cells.
"""

import os
import sys

import pytest

# Add the parent directory to the path to import the laxfrac package
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from laxfrac.errors import NotASquare, NotFound, SpecError
from laxfrac.models.category_model import (CyclicCellModel, FiniteCategorySpec, TrivialModel, load_category_model,
                                           load_cyclic_model, load_trivial_model)
from laxfrac.two_cat_core import ArrowCatMorphism, TwoCell, check_two_category_laws


def arrow_spec():
    return FiniteCategorySpec(name="arrow", objects=["A", "B"], morphisms={"s": ("A", "B")},
                              sigma=["id_A", "id_B", "s"])


@pytest.mark.unit
class TestLoadTrivialModel:
    """Validation of category specifications"""

    def test_identity_only_category(self):
        model = load_trivial_model(FiniteCategorySpec(objects=["A"], sigma=["id_A"]))
        assert model.morphisms() == ["id_A"]
        assert model.in_sigma("id_A")
        assert check_two_category_laws(model, 1) == []

    def test_arrow_category(self):
        model = load_trivial_model(arrow_spec())
        assert model.one_cells("A", "B") == ["s"]
        assert model.compose("s", "id_A") == "s"
        assert model.compose("id_B", "s") == "s"
        assert check_two_category_laws(model, 1) == []

    def test_custom_identity_names(self):
        spec = FiniteCategorySpec(objects=["A"], identities={"A": "1"}, sigma=["1"])
        model = load_trivial_model(spec)
        assert model.id1("A") == "1"
        assert model.is_identity("1")

    def test_non_associative_table(self):
        spec = FiniteCategorySpec(objects=["A"], morphisms={"a": ("A", "A"), "b": ("A", "A")},
                                  compose=[("a", "a", "b"), ("a", "b", "a"), ("b", "a", "b"), ("b", "b", "b")])
        with pytest.raises(SpecError, match="associative"):
            load_trivial_model(spec)

    def test_missing_composite(self):
        spec = FiniteCategorySpec(objects=["A", "B", "C"], morphisms={"f": ("A", "B"), "g": ("B", "C")})
        with pytest.raises(SpecError, match="no entry"):
            load_trivial_model(spec)

    def test_unknown_endpoint(self):
        spec = FiniteCategorySpec(objects=["A"], morphisms={"f": ("A", "Z")})
        with pytest.raises(SpecError, match="unknown endpoints"):
            load_trivial_model(spec)

    def test_composite_with_wrong_endpoints(self):
        spec = FiniteCategorySpec(objects=["A", "B", "C"],
                                  morphisms={"f": ("A", "B"), "g": ("B", "C"), "h": ("A", "B")},
                                  compose=[("g", "f", "h")])
        with pytest.raises(SpecError, match="wrong endpoints"):
            load_trivial_model(spec)

    def test_sigma_names_unknown_morphism(self):
        spec = FiniteCategorySpec(objects=["A"], sigma=["id_A", "t"])
        with pytest.raises(SpecError):
            load_trivial_model(spec)


@pytest.mark.unit
class TestTrivialModelSquares:
    """Σ-squares and canonical squares in a trivial-2-cell model"""

    def setup_method(self):
        self.model = load_trivial_model(arrow_spec())

    def test_canonical_square_of_s_along_s(self):
        sq = self.model.canonical_square("s", "s")
        assert (sq.top, sq.left, sq.right, sq.bottom) == ("s", "s", "id_B", "id_B")
        assert self.model.square_in_sigma(sq)

    def test_canonical_square_with_identities(self):
        sq = self.model.canonical_square("id_A", "s")
        assert (sq.top, sq.left, sq.right, sq.bottom) == ("id_A", "s", "s", "id_B")
        sq = self.model.canonical_square("s", "id_A")
        assert (sq.top, sq.left, sq.right, sq.bottom) == ("s", "id_A", "id_B", "s")

    def test_non_commuting_square(self):
        model = load_trivial_model(FiniteCategorySpec(objects=["A", "B"],
                                                      morphisms={"f": ("A", "B"), "g": ("A", "B")},
                                                      sigma=["id_A", "id_B"]))
        sq = ArrowCatMorphism("id_A", "id_B", "f", "g", TwoCell("f", "g"))
        with pytest.raises(NotASquare):
            model.square_in_sigma(sq)

    def test_missing_ore_square(self):
        model = load_trivial_model(FiniteCategorySpec(objects=["A", "B", "C"],
                                                      morphisms={"s": ("A", "B"), "g": ("A", "C")},
                                                      sigma=["id_A", "id_B", "id_C", "s"]))
        with pytest.raises(NotFound):
            model.canonical_square("s", "g")

    def test_only_identity_two_cells(self):
        assert self.model.two_cells("s", "s") == [TwoCell("s", "s")]
        assert self.model.find_invertible("s", "s") == TwoCell("s", "s")


def cyclic_arrow_spec(**extra):
    return FiniteCategorySpec(name="arrow-z3", objects=["A", "B"], morphisms={"s": ("A", "B")},
                              sigma=["id_A", "id_B", "s"], cells=3, weights={"s": 2}, **extra)


@pytest.mark.unit
class TestCyclicCellModel:
    """2-cells f ⇒ f labelled by Z/3, with whiskering after s doubling labels"""

    def setup_method(self):
        self.model = load_cyclic_model(cyclic_arrow_spec())

    def test_parallel_two_cells(self):
        assert self.model.two_cells("s", "s") == [TwoCell("s", "s", k) for k in range(3)]
        assert self.model.two_cells("id_A", "id_A")[2] == TwoCell("id_A", "id_A", 2)

    def test_vertical_composition_adds_labels(self):
        one, two = TwoCell("s", "s", 1), TwoCell("s", "s", 2)
        assert self.model.vcomp(two, one) == self.model.id2("s")
        assert self.model.inverse(one) == two

    def test_whiskering_scales_on_the_left_only(self):
        loop = TwoCell("id_A", "id_A", 1)
        assert self.model.lw("s", loop) == TwoCell("s", "s", 2)
        assert self.model.rw(TwoCell("s", "s", 1), "id_A") == TwoCell("s", "s", 1)
        assert self.model.hcomp_two_cells(TwoCell("s", "s", 1), loop) == TwoCell("s", "s", 0)

    def test_laws_hold(self):
        assert check_two_category_laws(self.model, 1) == []

    def test_dispatch_on_cells(self):
        assert isinstance(load_category_model(cyclic_arrow_spec()), CyclicCellModel)
        assert isinstance(load_category_model(arrow_spec()), TrivialModel)
        with pytest.raises(SpecError):
            load_trivial_model(cyclic_arrow_spec())

    def test_weight_must_be_a_unit(self):
        spec = FiniteCategorySpec(objects=["A", "B"], morphisms={"s": ("A", "B")}, cells=4, weights={"s": 2})
        with pytest.raises(SpecError, match="unit"):
            load_cyclic_model(spec)

    def test_identity_weight(self):
        spec = FiniteCategorySpec(objects=["A"], cells=3, weights={"id_A": 2})
        with pytest.raises(SpecError, match="weight 1"):
            load_cyclic_model(spec)

    def test_weights_multiply_along_composites(self):
        spec = FiniteCategorySpec(objects=["A", "B", "C"],
                                  morphisms={"f": ("A", "B"), "g": ("B", "C"), "h": ("A", "C")},
                                  compose=[("g", "f", "h")], cells=3, weights={"f": 2, "g": 2, "h": 2})
        with pytest.raises(SpecError, match="product"):
            load_cyclic_model(spec)


class DroppedUnitModel(CyclicCellModel):
    def _vcomp(self, beta, alpha):
        return TwoCell(alpha.source, beta.target, alpha.label)


class AsymmetricModel(CyclicCellModel):
    def eq2(self, alpha, beta):
        return (alpha.source, alpha.target) == (beta.source, beta.target) and alpha.label <= beta.label


class NearbyLabelsModel(CyclicCellModel):
    def eq2(self, alpha, beta):
        return (alpha.source, alpha.target) == (beta.source, beta.target) and abs(alpha.label - beta.label) <= 1


class IrreflexiveModel(CyclicCellModel):
    def eq2(self, alpha, beta):
        return alpha == beta and alpha.label != 1


class ShiftedWhiskerModel(CyclicCellModel):
    def _whisker_right(self, alpha, w):
        shifted = super()._whisker_right(alpha, w)
        return TwoCell(shifted.source, shifted.target, (shifted.label + 1) % self.order)


class ParityModel(CyclicCellModel):
    def eq2(self, alpha, beta):
        return (alpha.source, alpha.target) == (beta.source, beta.target) and alpha.label % 2 == beta.label % 2


@pytest.mark.unit
class TestLawFailures:
    """Each law check fires on a model built to break it"""

    def failures(self, model_class):
        return check_two_category_laws(model_class(cyclic_arrow_spec()), 1)

    def test_vertical_composite_dropping_an_identity(self):
        assert any("not units" in failure for failure in self.failures(DroppedUnitModel))

    def test_eq2_not_symmetric(self):
        failures = self.failures(AsymmetricModel)
        assert any("not symmetric" in failure for failure in failures)
        assert not any("not reflexive" in failure for failure in failures)

    def test_eq2_not_transitive(self):
        failures = self.failures(NearbyLabelsModel)
        assert any("not transitive" in failure for failure in failures)
        assert not any("not symmetric" in failure for failure in failures)

    def test_eq2_not_reflexive(self):
        assert any("not reflexive" in failure for failure in self.failures(IrreflexiveModel))

    def test_whiskering_by_identity(self):
        failures = self.failures(ShiftedWhiskerModel)
        assert any("whiskering by an identity 1-cell" in failure for failure in failures)
        assert any("is not an identity" in failure for failure in failures)

    def test_eq2_not_a_congruence(self):
        failures = self.failures(ParityModel)
        assert any("not respected" in failure for failure in failures)
        assert not any("not transitive" in failure or "not symmetric" in failure for failure in failures)
