import logging
from itertools import product
from math import gcd
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from laxfrac.errors import NotASquare, NotFound, SpecError
from laxfrac.two_cat_core import ArrowCatMorphism, LocallyPosetalModel, TwoCatModel, TwoCell

logger = logging.getLogger(__name__)


class FiniteCategorySpec(BaseModel):
    """A finite category given by generators and a composition table"""
    name: str = Field("category", description="Name used in reports")
    objects: List[str] = Field(..., description="Object names in canonical order")
    morphisms: Dict[str, Tuple[str, str]] = Field(
        default_factory=dict, description="Non-identity morphisms: name -> (dom, cod)")
    identities: Dict[str, str] = Field(
        default_factory=dict, description="Optional identity names per object; defaults to id_<object>")
    compose: List[Tuple[str, str, str]] = Field(
        default_factory=list, description="Entries (g, f, g∘f) for every composable non-identity pair")
    sigma: List[str] = Field(default_factory=list, description="Morphisms forming the class Σ")
    cells: int = Field(1, ge=1, description="Order n of the cyclic group of 2-cells f ⇒ f; 1 means identities only")
    weights: Dict[str, int] = Field(
        default_factory=dict, description="Unit of Z/n by which whiskering after a morphism scales labels")

    def identity_name(self, obj: str) -> str:
        return self.identities.get(obj, f"id_{obj}")


class FiniteCategoryModel(TwoCatModel):
    """1-cells, Σ and witness providers shared by the finite-category models.

    Σ-squares are the squares that commute on 1-cells and have both
    horizontal edges in Σ; any invertible 2-cell may fill them.
    """

    def __init__(self, spec: FiniteCategorySpec):
        self.spec = spec
        self.name = spec.name
        self._ids: Dict[str, str] = {obj: spec.identity_name(obj) for obj in spec.objects}
        self._ends: Dict[str, Tuple[str, str]] = {name: (obj, obj) for obj, name in self._ids.items()}
        self._ends.update({name: tuple(ends) for name, ends in spec.morphisms.items()})
        self._order: List[str] = list(self._ids.values()) + list(spec.morphisms)
        self._table: Dict[Tuple[str, str], str] = {(g, f): gf for g, f, gf in spec.compose}
        self._sigma = set(spec.sigma)
        self._identity_names = set(self._ids.values())

    def objects(self) -> List[str]:
        return list(self.spec.objects)

    def size(self, obj: str) -> int:
        return 1

    def search_objects(self, bound: int) -> List[str]:
        return self.objects()

    def completeness_bound(self, *objs: str) -> Optional[int]:
        return 1

    def morphisms(self) -> List[str]:
        return list(self._order)

    def one_cells(self, a: str, b: str) -> List[str]:
        return [m for m in self._order if self._ends[m] == (a, b)]

    def dom(self, f: str) -> str:
        return self._ends[f][0]

    def cod(self, f: str) -> str:
        return self._ends[f][1]

    def id1(self, a: str) -> str:
        return self._ids[a]

    def is_identity(self, f: str) -> bool:
        return f in self._identity_names

    def _compose(self, g: str, f: str) -> str:
        if self.is_identity(g):
            return f
        if self.is_identity(f):
            return g
        try:
            return self._table[(g, f)]
        except KeyError:
            raise SpecError(f"composition table has no entry for {g}∘{f}") from None

    def in_sigma(self, f: str) -> bool:
        return f in self._sigma

    def commutes(self, sq: ArrowCatMorphism) -> bool:
        return self.compose(sq.target, sq.u) == self.compose(sq.v, sq.source)

    def square_in_sigma(self, sq: ArrowCatMorphism) -> bool:
        if not self.commutes(sq):
            raise NotASquare(f"square {sq.source}/{sq.target} over {sq.u}, {sq.v} does not commute")
        return self.in_sigma(sq.source) and self.in_sigma(sq.target)

    def _square(self, r: str, s: str, u: str, v: str) -> ArrowCatMorphism:
        return ArrowCatMorphism(r, s, u, v, self.id2(self.compose(s, u)))

    def canonical_square(self, r: str, g: str) -> ArrowCatMorphism:
        if self.is_identity(r):
            return self._square(r, self.id1(self.cod(g)), g, g)
        if self.is_identity(g):
            return self._square(r, r, g, self.id1(self.cod(r)))
        for w in self.objects():
            for s_prime, f_prime in product(self.one_cells(self.cod(g), w), self.one_cells(self.cod(r), w)):
                if self.in_sigma(s_prime) and self.compose(s_prime, g) == self.compose(f_prime, r):
                    return self._square(r, s_prime, g, f_prime)
        raise NotFound(f"no Σ-square completes the span ({r}, {g})")

    def square_witness(self, r: str, g: str, bound: int) -> ArrowCatMorphism:
        return self.canonical_square(r, g)

    def equi_insertion_witness(self, sq: ArrowCatMorphism, g: str, alpha: TwoCell,
                               bound: int) -> Tuple[str, TwoCell]:
        s, f_prime = sq.target, sq.v
        for d in self._order:
            if self.dom(d) != self.cod(s):
                continue
            if self.in_sigma(self.compose(d, s)) and self.compose(d, f_prime) == self.compose(d, g):
                whiskered = self.lw(d, alpha)
                return d, TwoCell(self.compose(d, f_prime), self.compose(d, g), whiskered.label)
        raise NotFound(f"no morphism coequalises {f_prime} and {g} inside Σ after {s}")

    def equification_witness(self, sq: ArrowCatMorphism, alpha: TwoCell, beta: TwoCell, bound: int) -> str:
        return self.id1(self.cod(sq.v))

    def joint_cocone(self, xs: List[str], ys: List[str], x3: str, y3: str) -> Optional[Tuple[str, str]]:
        big_x, big_y = self.cod(x3), self.cod(y3)
        for d_obj in self.objects():
            for d_x, d_y in product(self.one_cells(big_x, d_obj), self.one_cells(big_y, d_obj)):
                if any(self.compose(d_x, x) != self.compose(d_y, y) for x, y in zip(xs, ys)):
                    continue
                d = self.compose(d_x, x3)
                if d == self.compose(d_y, y3) and self.in_sigma(d):
                    return d_x, d_y
        return None

    def coequalizing_extension(self, s: str, pairs: List[Tuple[str, str]]) -> Optional[str]:
        return self.id1(self.cod(s)) if all(a == b for a, b in pairs) else None

    def sort_key(self, f: str) -> int:
        return self._order.index(f)


class TrivialModel(FiniteCategoryModel, LocallyPosetalModel):
    """A finite category viewed as a 2-category whose only 2-cells are identities."""

    def leq(self, f: str, g: str) -> bool:
        return f == g


class CyclicCellModel(FiniteCategoryModel):
    """A finite category whose 2-cells f ⇒ f are the elements of Z/n, labelled 0..n-1.

    Vertical composition adds labels. Whiskering w∘alpha multiplies the label
    by the weight of w, a unit of Z/n; alpha∘w keeps it. Horizontal
    composites are therefore (beta∘g)·(h∘alpha) = b + weight(h)·a.
    """

    def __init__(self, spec: FiniteCategorySpec):
        super().__init__(spec)
        self.order = spec.cells
        self._weights: Dict[str, int] = {name: spec.weights.get(name, 1) % self.order for name in self._order}

    def weight(self, f: str) -> int:
        return self._weights[f]

    def two_cells(self, f: str, g: str) -> List[TwoCell]:
        return [TwoCell(f, f, k) for k in range(self.order)] if f == g else []

    def id2(self, f: str) -> TwoCell:
        return TwoCell(f, f, 0)

    def _vcomp(self, beta: TwoCell, alpha: TwoCell) -> TwoCell:
        return TwoCell(alpha.source, beta.target, (alpha.label + beta.label) % self.order)

    def _whisker_left(self, w: str, alpha: TwoCell) -> TwoCell:
        return TwoCell(self._compose(w, alpha.source), self._compose(w, alpha.target),
                       self.weight(w) * alpha.label % self.order)

    def _whisker_right(self, alpha: TwoCell, w: str) -> TwoCell:
        return TwoCell(self._compose(alpha.source, w), self._compose(alpha.target, w), alpha.label)

    def find_inverse(self, alpha: TwoCell) -> Optional[TwoCell]:
        if alpha.source != alpha.target:
            return None
        return TwoCell(alpha.target, alpha.source, -alpha.label % self.order)


def _check_table(model: FiniteCategoryModel, spec: FiniteCategorySpec) -> None:
    objects = set(spec.objects)
    if len(objects) != len(spec.objects):
        raise SpecError("duplicate object names")
    for name, (a, b) in spec.morphisms.items():
        if a not in objects or b not in objects:
            raise SpecError(f"morphism {name} has unknown endpoints ({a}, {b})")
    names = model.morphisms()
    if len(set(names)) != len(names):
        raise SpecError("morphism names clash with identity names")
    for g, f, gf in spec.compose:
        for part in (g, f, gf):
            if part not in model._ends:
                raise SpecError(f"composition entry ({g}, {f}, {gf}) names unknown morphism {part}")
        if model.cod(f) != model.dom(g):
            raise SpecError(f"composition entry {g}∘{f} is not composable")
        if model._ends[gf] != (model.dom(f), model.cod(g)):
            raise SpecError(f"composite {gf} has the wrong endpoints for {g}∘{f}")
    for name in spec.sigma:
        if name not in model._ends:
            raise SpecError(f"Σ names unknown morphism {name}")
    for g, f in product(names, names):
        if model.cod(f) == model.dom(g):
            model._compose(g, f)
    for h, g, f in product(names, names, names):
        if model.cod(f) == model.dom(g) and model.cod(g) == model.dom(h):
            left = model._compose(model._compose(h, g), f)
            right = model._compose(h, model._compose(g, f))
            if left != right:
                raise SpecError(f"composition is not associative at ({h}, {g}, {f}): {left} != {right}")


def load_trivial_model(spec: FiniteCategorySpec) -> TrivialModel:
    """Validate ``spec`` and build its trivial-2-cell model.

    Raises SpecError on unknown objects, missing or ill-typed composites and
    non-associative tables.
    """
    if spec.cells != 1:
        raise SpecError(f"{spec.name} has {spec.cells} 2-cells per 1-cell, trivial models have one")
    model = TrivialModel(spec)
    _check_table(model, spec)
    logger.info(f"loaded category {spec.name} with {len(spec.objects)} objects and {len(model.morphisms())} morphisms")
    return model


def load_cyclic_model(spec: FiniteCategorySpec) -> CyclicCellModel:
    """Validate ``spec`` and build its model with Z/cells 2-cells on every 1-cell.

    Weights must be units of Z/cells, 1 on identities and multiplicative
    along the composition table.
    """
    model = CyclicCellModel(spec)
    _check_table(model, spec)
    n = spec.cells
    for name, w in spec.weights.items():
        if name not in model._ends:
            raise SpecError(f"weight given for unknown morphism {name}")
        if gcd(w % n, n) != 1:
            raise SpecError(f"weight {w} of {name} is not a unit modulo {n}")
        if model.is_identity(name) and w % n != 1:
            raise SpecError(f"identity {name} must have weight 1")
    for g, f, gf in spec.compose:
        if model.weight(gf) != model.weight(g) * model.weight(f) % n:
            raise SpecError(f"weight of {gf} is not the product of the weights of {g} and {f}")
    logger.info(f"loaded category {spec.name} with Z/{n} 2-cells and {len(model.morphisms())} morphisms")
    return model


def load_category_model(spec: FiniteCategorySpec) -> FiniteCategoryModel:
    if spec.cells == 1:
        return load_trivial_model(spec)
    return load_cyclic_model(spec)
