"""
Abstract interface of a finite 2-category model.

A model enumerates its objects, 1-cells and 2-cells, composes them, and
decides the membership predicates of the chosen class of squares. The
constructive witness providers (Square, Equi-insertion, Equification)
are optional shortcuts; the calculus falls back to bounded search when a
model returns None from them.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, Hashable, List, Optional, Tuple

from laxfrac.errors import BoundaryError, PreconditionError

logger = logging.getLogger(__name__)

OneCell = Hashable
Obj = Hashable


@dataclass(frozen=True)
class TwoCell:
    """A 2-cell source ⇒ target; label distinguishes parallel cells in non-posetal models."""

    source: OneCell
    target: OneCell
    label: Any = None

    def __repr__(self) -> str:
        tag = f"[{self.label}]" if self.label is not None else ""
        return f"{self.source!r} => {self.target!r}{tag}"


@dataclass(frozen=True)
class ArrowCatMorphism:
    """A morphism (u, v, delta): source -> target of the arrow category.

    source f: X→Y, target g: Z→W, u: X→Z, v: Y→W and delta: g∘u ⇒ v∘f.
    Drawn as a square, source is the top edge, target the bottom edge,
    u the left edge and v the right edge.
    """

    source: OneCell
    target: OneCell
    u: OneCell
    v: OneCell
    delta: TwoCell

    @property
    def top(self) -> OneCell:
        return self.source

    @property
    def bottom(self) -> OneCell:
        return self.target

    @property
    def left(self) -> OneCell:
        return self.u

    @property
    def right(self) -> OneCell:
        return self.v


class TwoCatModel(ABC):
    """A finite, enumerable 2-category together with a class Σ of squares."""

    name: str = "model"

    # objects

    @abstractmethod
    def objects(self) -> List[Obj]:
        """All objects of the enumerated universe in canonical order."""

    @abstractmethod
    def size(self, obj: Obj) -> int:
        """Size used by bounded searches."""

    def search_objects(self, bound: int) -> List[Obj]:
        """Candidate codomains for witness searches, smallest first."""
        return [obj for obj in self.objects() if self.size(obj) <= bound]

    def completeness_bound(self, *objs: Obj) -> Optional[int]:
        """Search size that makes a cocone search over ``objs`` exhaustive, if known."""
        return None

    # 1-cells

    @abstractmethod
    def one_cells(self, a: Obj, b: Obj) -> List[OneCell]:
        """All 1-cells a → b in canonical order."""

    @abstractmethod
    def dom(self, f: OneCell) -> Obj:
        ...

    @abstractmethod
    def cod(self, f: OneCell) -> Obj:
        ...

    @abstractmethod
    def id1(self, a: Obj) -> OneCell:
        ...

    @abstractmethod
    def _compose(self, g: OneCell, f: OneCell) -> OneCell:
        ...

    # 2-cells

    @abstractmethod
    def two_cells(self, f: OneCell, g: OneCell) -> List[TwoCell]:
        """All 2-cells f ⇒ g in canonical order."""

    @abstractmethod
    def id2(self, f: OneCell) -> TwoCell:
        ...

    @abstractmethod
    def _vcomp(self, beta: TwoCell, alpha: TwoCell) -> TwoCell:
        ...

    @abstractmethod
    def _whisker_left(self, w: OneCell, alpha: TwoCell) -> TwoCell:
        """w∘alpha, with w applied after alpha's 1-cells."""

    @abstractmethod
    def _whisker_right(self, alpha: TwoCell, w: OneCell) -> TwoCell:
        """alpha∘w, with w applied before alpha's 1-cells."""

    def eq2(self, alpha: TwoCell, beta: TwoCell) -> bool:
        return alpha == beta

    # the class Σ

    @abstractmethod
    def in_sigma(self, f: OneCell) -> bool:
        """Whether f is a Σ-object."""

    @abstractmethod
    def square_in_sigma(self, sq: ArrowCatMorphism) -> bool:
        """Whether a well-formed square is a morphism of Σ."""

    @abstractmethod
    def canonical_square(self, r: OneCell, g: OneCell) -> ArrowCatMorphism:
        """The fixed Σ-square chosen for the span (r ∈ Σ, g) with common domain."""

    # optional witness shortcuts

    def square_witness(self, r: OneCell, g: OneCell, bound: int) -> Optional[ArrowCatMorphism]:
        return None

    def equi_insertion_witness(self, sq: ArrowCatMorphism, g: OneCell, alpha: TwoCell,
                               bound: int) -> Optional[Tuple[OneCell, TwoCell]]:
        return None

    def equification_witness(self, sq: ArrowCatMorphism, alpha: TwoCell, beta: TwoCell,
                             bound: int) -> Optional[OneCell]:
        return None

    def joint_cocone(self, xs: List[OneCell], ys: List[OneCell], x3: OneCell,
                     y3: OneCell) -> Optional[Tuple[OneCell, OneCell]]:
        """Universal (d_x, d_y) with d_x x_i = d_y y_i and both Σ-conditions, if the model knows one.

        Raises NotImplementedError when the model has no such construction.
        """
        raise NotImplementedError

    def coequalizing_extension(self, s: OneCell, pairs: List[Tuple[OneCell, OneCell]]) -> Optional[OneCell]:
        """d with (top s, left 1, right d, bottom d∘s) in Σ and d∘a ≅ d∘b for every (a, b) in ``pairs``.

        Raises NotImplementedError when the model has no such construction.
        """
        raise NotImplementedError

    def is_identity(self, f: OneCell) -> bool:
        return f == self.id1(self.dom(f))

    def sort_key(self, f: OneCell) -> Any:
        return repr(f)

    # checked operations

    def compose_one_cells(self, g: OneCell, f: OneCell) -> OneCell:
        if self.cod(f) != self.dom(g):
            raise BoundaryError(f"cannot compose {g!r} after {f!r}: codomain {self.cod(f)!r} "
                                f"differs from domain {self.dom(g)!r}")
        return self._compose(g, f)

    def compose(self, *cells: OneCell) -> OneCell:
        """compose(h, g, f) = h∘g∘f."""
        if not cells:
            raise BoundaryError("empty composite")
        result = cells[-1]
        for cell in reversed(cells[:-1]):
            result = self.compose_one_cells(cell, result)
        return result

    def vcomp_two_cells(self, beta: TwoCell, alpha: TwoCell) -> TwoCell:
        if alpha.target != beta.source:
            raise BoundaryError(f"2-cells do not chain: {alpha!r} then {beta!r}")
        return self._vcomp(beta, alpha)

    def vcomp(self, *cells: TwoCell) -> TwoCell:
        """vcomp(c, b, a) = c·b·a."""
        result = cells[-1]
        for cell in reversed(cells[:-1]):
            result = self.vcomp_two_cells(cell, result)
        return result

    def whisker(self, w: OneCell, alpha: TwoCell, side: str) -> TwoCell:
        if side == "left":
            if self.dom(w) != self.cod(alpha.source):
                raise BoundaryError(f"cannot whisker {alpha!r} by {w!r} on the left")
            return self._whisker_left(w, alpha)
        if side == "right":
            if self.cod(w) != self.dom(alpha.source):
                raise BoundaryError(f"cannot whisker {alpha!r} by {w!r} on the right")
            return self._whisker_right(alpha, w)
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    def lw(self, w: OneCell, alpha: TwoCell) -> TwoCell:
        return self.whisker(w, alpha, "left")

    def rw(self, alpha: TwoCell, w: OneCell) -> TwoCell:
        return self.whisker(w, alpha, "right")

    def hcomp_two_cells(self, beta: TwoCell, alpha: TwoCell) -> TwoCell:
        """beta∘alpha = (beta∘g)·(h∘alpha) for alpha: f ⇒ g and beta: h ⇒ k."""
        return self.vcomp_two_cells(self.rw(beta, alpha.target), self.lw(beta.source, alpha))

    def is_invertible(self, alpha: TwoCell) -> bool:
        return self.find_inverse(alpha) is not None

    def find_inverse(self, alpha: TwoCell) -> Optional[TwoCell]:
        for beta in self.two_cells(alpha.target, alpha.source):
            if (self.eq2(self._vcomp(beta, alpha), self.id2(alpha.source))
                    and self.eq2(self._vcomp(alpha, beta), self.id2(alpha.target))):
                return beta
        return None

    def inverse(self, alpha: TwoCell) -> TwoCell:
        beta = self.find_inverse(alpha)
        if beta is None:
            raise PreconditionError(f"2-cell {alpha!r} is not invertible")
        return beta

    def find_two_cell(self, f: OneCell, g: OneCell) -> Optional[TwoCell]:
        cells = self.two_cells(f, g)
        return cells[0] if cells else None

    def find_invertible(self, f: OneCell, g: OneCell) -> Optional[TwoCell]:
        for cell in self.two_cells(f, g):
            if self.is_invertible(cell):
                return cell
        return None

    def all_one_cells(self, bound: int) -> List[OneCell]:
        objs = self.search_objects(bound)
        return [f for a, b in product(objs, objs) for f in self.one_cells(a, b)]


class LocallyPosetalModel(TwoCatModel):
    """Models with at most one 2-cell between parallel 1-cells, given by a preorder."""

    @abstractmethod
    def leq(self, f: OneCell, g: OneCell) -> bool:
        ...

    def two_cells(self, f: OneCell, g: OneCell) -> List[TwoCell]:
        return [TwoCell(f, g)] if self.leq(f, g) else []

    def id2(self, f: OneCell) -> TwoCell:
        return TwoCell(f, f)

    def _vcomp(self, beta: TwoCell, alpha: TwoCell) -> TwoCell:
        return TwoCell(alpha.source, beta.target)

    def _whisker_left(self, w: OneCell, alpha: TwoCell) -> TwoCell:
        return TwoCell(self._compose(w, alpha.source), self._compose(w, alpha.target))

    def _whisker_right(self, alpha: TwoCell, w: OneCell) -> TwoCell:
        return TwoCell(self._compose(alpha.source, w), self._compose(alpha.target, w))

    def eq2(self, alpha: TwoCell, beta: TwoCell) -> bool:
        return alpha.source == beta.source and alpha.target == beta.target

    def find_inverse(self, alpha: TwoCell) -> Optional[TwoCell]:
        return TwoCell(alpha.target, alpha.source) if self.leq(alpha.target, alpha.source) else None


def check_two_category_laws(model: TwoCatModel, bound: int) -> List[str]:
    """Exhaustively check eq2, associativity, unitality, whiskering and interchange up to ``bound``.

    Returns a list of human-readable failures; empty means every law held.
    """
    failures: List[str] = []
    objs = model.search_objects(bound)
    cells = {(a, b): model.one_cells(a, b) for a, b in product(objs, objs)}

    for a, b in product(objs, objs):
        for f in cells[(a, b)]:
            if model.compose(model.id1(b), f) != f or model.compose(f, model.id1(a)) != f:
                failures.append(f"unit law fails for {f!r}")
            alpha = model.id2(f)
            if not model.eq2(model.vcomp(alpha, alpha), alpha):
                failures.append(f"identity 2-cell not idempotent on {f!r}")
        for f, g in product(cells[(a, b)], repeat=2):
            parallel = model.two_cells(f, g)
            failures.extend(_equivalence_failures(model, parallel))
            for alpha in parallel:
                if not (model.eq2(model.vcomp(model.id2(g), alpha), alpha)
                        and model.eq2(model.vcomp(alpha, model.id2(f)), alpha)):
                    failures.append(f"identity 2-cells are not units for {alpha!r}")
                if not (model.eq2(model.lw(model.id1(b), alpha), alpha)
                        and model.eq2(model.rw(alpha, model.id1(a)), alpha)):
                    failures.append(f"whiskering by an identity 1-cell changes {alpha!r}")

    for a, b, c in product(objs, repeat=3):
        for f, w in product(cells[(a, b)], cells[(b, c)]):
            if not model.eq2(model.lw(w, model.id2(f)), model.id2(model.compose(w, f))):
                failures.append(f"{w!r} whiskered onto the identity of {f!r} is not an identity")
            if not model.eq2(model.rw(model.id2(w), f), model.id2(model.compose(w, f))):
                failures.append(f"the identity of {w!r} whiskered by {f!r} is not an identity")

    for a, b in product(objs, objs):
        hom = cells[(a, b)]
        for f, g in product(hom, repeat=2):
            failures.extend(_congruence_failures(model, objs, cells, a, b, f, g))

    for a, b, c, d in product(objs, repeat=4):
        for f, g, h in product(cells[(a, b)], cells[(b, c)], cells[(c, d)]):
            if model.compose(h, model.compose(g, f)) != model.compose(model.compose(h, g), f):
                failures.append(f"associativity fails for {h!r}, {g!r}, {f!r}")

    for a, b in product(objs, objs):
        hom = cells[(a, b)]
        for f, g, h in product(hom, repeat=3):
            for alpha, beta in product(model.two_cells(f, g), model.two_cells(g, h)):
                composite = model.vcomp(beta, alpha)
                if composite.source != f or composite.target != h:
                    failures.append(f"vertical composite has wrong boundary: {composite!r}")
                for gamma in model.two_cells(h, h):
                    lhs = model.vcomp(gamma, model.vcomp(beta, alpha))
                    rhs = model.vcomp(model.vcomp(gamma, beta), alpha)
                    if not model.eq2(lhs, rhs):
                        failures.append(f"vertical associativity fails at {f!r}, {g!r}, {h!r}")

    chains = {key: _two_cell_chains(model, hom) for key, hom in cells.items()}
    for a, b, c in product(objs, repeat=3):
        for (alpha, alpha2), (beta, beta2) in product(chains[(a, b)], chains[(b, c)]):
            lhs = model.hcomp_two_cells(model.vcomp(beta2, beta), model.vcomp(alpha2, alpha))
            rhs = model.vcomp(model.hcomp_two_cells(beta2, alpha2), model.hcomp_two_cells(beta, alpha))
            if not model.eq2(lhs, rhs):
                failures.append(f"interchange fails at {alpha!r}, {beta!r}")

    if failures:
        logger.warning(f"{len(failures)} 2-category law failures in {model.name}")
    return failures


def _two_cell_chains(model: TwoCatModel, hom: List[OneCell]) -> List[Tuple[TwoCell, TwoCell]]:
    chains = []
    for f, g in product(hom, hom):
        for alpha in model.two_cells(f, g):
            for h in hom:
                chains.extend((alpha, alpha2) for alpha2 in model.two_cells(g, h))
    return chains


def _equivalence_failures(model: TwoCatModel, parallel: List[TwoCell]) -> List[str]:
    failures = []
    for alpha in parallel:
        if not model.eq2(alpha, alpha):
            failures.append(f"eq2 is not reflexive at {alpha!r}")
    for alpha, beta in product(parallel, repeat=2):
        if model.eq2(alpha, beta) and not model.eq2(beta, alpha):
            failures.append(f"eq2 is not symmetric at {alpha!r}, {beta!r}")
        if not model.eq2(alpha, beta):
            continue
        for gamma in parallel:
            if model.eq2(beta, gamma) and not model.eq2(alpha, gamma):
                failures.append(f"eq2 is not transitive at {alpha!r}, {beta!r}, {gamma!r}")
    return failures


def _congruence_failures(model: TwoCatModel, objs: List[Obj], cells: Dict[Tuple[Obj, Obj], List[OneCell]],
                         a: Obj, b: Obj, f: OneCell, g: OneCell) -> List[str]:
    """eq2 between 2-cells f ⇒ g survives vertical composition and whiskering."""
    failures = []
    parallel = model.two_cells(f, g)
    for alpha, alpha2 in product(parallel, repeat=2):
        if alpha == alpha2 or not model.eq2(alpha, alpha2):
            continue
        for h in cells[(a, b)]:
            for beta in model.two_cells(g, h):
                if not model.eq2(model.vcomp(beta, alpha), model.vcomp(beta, alpha2)):
                    failures.append(f"eq2 is not respected by composing {alpha!r} with {beta!r}")
            for beta in model.two_cells(h, f):
                if not model.eq2(model.vcomp(alpha, beta), model.vcomp(alpha2, beta)):
                    failures.append(f"eq2 is not respected by composing {beta!r} with {alpha!r}")
        for c in objs:
            for w in cells[(b, c)]:
                if not model.eq2(model.lw(w, alpha), model.lw(w, alpha2)):
                    failures.append(f"eq2 is not respected by whiskering {alpha!r} after {w!r}")
            for w in cells[(c, a)]:
                if not model.eq2(model.rw(alpha, w), model.rw(alpha2, w)):
                    failures.append(f"eq2 is not respected by whiskering {alpha!r} before {w!r}")
    return failures
