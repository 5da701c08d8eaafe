"""
Adjunctions, Beck-Chevalley squares and the canonical functor P: 𝒳 → 𝒳[Σ*].

Every Σ-object s becomes a left adjoint right inverse (lari) in the
localisation, with right adjoint the cospan (1, s). Images of Σ-squares
under P satisfy the Beck-Chevalley condition.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Union

from laxfrac.errors import Decision, NotFound, PreconditionError
from laxfrac.lax_fractions import LaxFractions, SigmaCospan, TwoCellClass, TwoMorphism
from laxfrac.sigma_calculus import SigmaSquare, equi_insertion
from laxfrac.two_cat_core import Obj, OneCell, TwoCatModel, TwoCell

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Adjunction:
    """f ⊣ g with unit eta: 1 ⇒ g∘f and counit epsilon: f∘g ⇒ 1."""
    left: OneCell
    right: OneCell
    unit: TwoCell
    counit: TwoCell


def _triangles_hold(model: TwoCatModel, adj: Adjunction) -> bool:
    f, g = adj.left, adj.right
    first = model.vcomp(model.rw(adj.counit, f), model.lw(f, adj.unit))
    second = model.vcomp(model.lw(g, adj.counit), model.rw(adj.unit, g))
    return model.eq2(first, model.id2(f)) and model.eq2(second, model.id2(g))


def find_right_adjoint(model: TwoCatModel, f: OneCell, lari: bool = False) -> Adjunction:
    """A right adjoint of f; with ``lari`` the unit must also be invertible.

    Raises NotFound once every candidate in the model is exhausted.
    """
    a, b = model.dom(f), model.cod(f)
    for g in model.one_cells(b, a):
        units = model.two_cells(model.id1(a), model.compose(g, f))
        counits = model.two_cells(model.compose(f, g), model.id1(b))
        for eta, epsilon in product(units, counits):
            if lari and not model.is_invertible(eta):
                continue
            adj = Adjunction(f, g, eta, epsilon)
            if _triangles_hold(model, adj):
                return adj
    raise NotFound(f"{f!r} has no right adjoint{' with invertible unit' if lari else ''}")


def is_lari(model: TwoCatModel, f: OneCell) -> bool:
    """Predicate form of ``find_right_adjoint(model, f, lari=True)``.

    False exactly when that search raises NotFound; callers that need the
    adjunction or the certificate of its absence call the search directly.
    """
    try:
        find_right_adjoint(model, f, lari=True)
    except NotFound:
        return False
    return True


def mate_of_square(model: TwoCatModel, sq: SigmaSquare, top: Adjunction, bottom: Adjunction) -> TwoCell:
    """The mate u∘r_* ⇒ s_*∘v of delta: s∘u ⇒ v∘r."""
    r, s, u, v = sq.top, sq.bottom, sq.left, sq.right
    if top.left != r or bottom.left != s:
        raise PreconditionError("adjunctions do not match the horizontal edges of the square")
    r_star, s_star = top.right, bottom.right
    return model.vcomp(model.lw(model.compose(s_star, v), top.counit),
                       model.rw(model.lw(s_star, sq.delta), r_star),
                       model.rw(bottom.unit, model.compose(u, r_star)))


def is_beck_chevalley(model: TwoCatModel, sq: SigmaSquare) -> bool:
    """Horizontal edges must be laris; the square is BC when its mate is invertible."""
    try:
        top = find_right_adjoint(model, sq.top, lari=True)
        bottom = find_right_adjoint(model, sq.bottom, lari=True)
    except NotFound as exc:
        raise PreconditionError(f"horizontal edges are not laris: {exc}") from None
    return model.is_invertible(mate_of_square(model, sq, top, bottom))


# the canonical functor


def apply_p(engine: LaxFractions, x: Union[Obj, OneCell, TwoCell]) -> Union[Obj, SigmaCospan, TwoCellClass]:
    """P(A) = A, P(f) = (f, 1) and P(alpha) = [alpha, 1, 1, 1]."""
    m = engine.model
    if isinstance(x, TwoCell):
        src, tgt = apply_p(engine, x.source), apply_p(engine, x.target)
        one = m.id1(src.apex)
        return engine.cls(TwoMorphism(src, tgt, x, one, one, one, m.id2(one), m.id2(one)))
    if _is_one_cell(m, x):
        return engine.cospan(x, m.id1(m.cod(x)))
    return x


def _is_one_cell(model: TwoCatModel, x) -> bool:
    try:
        model.dom(x)
    except (KeyError, AttributeError, TypeError):
        return False
    return True


@dataclass(frozen=True)
class LocalizedAdjunction:
    """P(s) ⊣ (1, s) in the localisation with unit and counit classes."""
    left: SigmaCospan
    right: SigmaCospan
    unit: TwoCellClass
    counit: TwoCellClass


@dataclass(frozen=True)
class TriangleReport:
    left_triangle: Decision
    right_triangle: Decision
    unit_invertible: Decision

    @property
    def passed(self) -> bool:
        return all(d is Decision.YES for d in (self.left_triangle, self.right_triangle, self.unit_invertible))


def lari_in_localization(engine: LaxFractions, s: OneCell) -> LocalizedAdjunction:
    """Unit [id_s, s, 1, s] and counit from Equi-insertion on the canonical square of (s, s)."""
    m = engine.model
    if not m.in_sigma(s):
        raise PreconditionError(f"{s!r} is not a Σ-object")
    a, b = m.dom(s), m.cod(s)
    p_s = apply_p(engine, s)
    right = engine.cospan(m.id1(b), s)
    unit_src = engine.identity_cospan(a)
    unit_tgt = engine.compose_cospans(right, p_s)
    unit = engine.cls(engine.two_morphism(unit_src, unit_tgt, s, m.id1(b), s,
                                          m.id2(s), m.id2(s), m.id2(s)))

    counit_src = engine.compose_cospans(p_s, right)
    can = engine.canonical_square(s, s)
    r_dot, g_dot = can.bottom, can.right
    if counit_src.f != g_dot or counit_src.r != r_dot:
        raise PreconditionError("composite P(s)∘(1, s) is not the canonical cospan")
    inserted = equi_insertion(m, can, r_dot, m.inverse(can.delta), engine.witness_bound)
    q = inserted.d
    q_r = m.compose(q, r_dot)
    counit_tgt = engine.identity_cospan(b)
    counit = engine.cls(engine.two_morphism(counit_src, counit_tgt, q, q_r, q_r,
                                            inserted.alpha_prime, m.id2(q_r), m.id2(q_r)))
    return LocalizedAdjunction(p_s, right, unit, counit)


def check_localized_triangles(engine: LaxFractions, adj: LocalizedAdjunction) -> TriangleReport:
    p_s, right = adj.left, adj.right
    left_path = engine.vcompose_all(
        engine.whisker_right(adj.counit, p_s),
        engine.associator_inverse(p_s, right, p_s),
        engine.whisker_left(p_s, adj.unit))
    right_path = engine.vcompose_all(
        engine.whisker_left(right, adj.counit),
        engine.associator(right, p_s, right),
        engine.whisker_right(adj.unit, right))
    first = engine.same_class(left_path, engine.identity_two_cell(p_s)).decision
    second = engine.same_class(right_path, engine.identity_two_cell(right)).decision
    invertible, _ = engine.invert_class(adj.unit)
    return TriangleReport(first, second, invertible)


def localized_mate(engine: LaxFractions, sq: SigmaSquare) -> TwoCellClass:
    """Mate of P(delta) for a Σ-square, built from the localised adjunctions of its horizontals."""
    m = engine.model
    top = lari_in_localization(engine, sq.top)
    bottom = lari_in_localization(engine, sq.bottom)
    p_u, p_v = apply_p(engine, sq.left), apply_p(engine, sq.right)
    r_star, s_star = top.right, bottom.right
    p_s, p_r = bottom.left, top.left
    if engine.compose_cospans(p_s, p_u) != apply_p(engine, m.compose(sq.bottom, sq.left)):
        raise PreconditionError("P does not preserve the composite s∘u strictly")
    if engine.compose_cospans(p_v, p_r) != apply_p(engine, m.compose(sq.right, sq.top)):
        raise PreconditionError("P does not preserve the composite v∘r strictly")
    start = engine.compose_cospans(p_u, r_star)
    p_delta = apply_p(engine, sq.delta)
    steps = [
        engine.whisker_right(bottom.unit, start),
        engine.associator(start, p_s, s_star),
        engine.whisker_left(s_star, engine.associator_inverse(r_star, p_u, p_s)),
        engine.whisker_left(s_star, engine.whisker_right(p_delta, r_star)),
        engine.whisker_left(s_star, engine.associator(r_star, p_r, p_v)),
        engine.whisker_left(s_star, engine.whisker_left(p_v, top.counit)),
    ]
    return engine.vcompose_all(*reversed(steps))


def verify_bc_image(engine: LaxFractions, sq: SigmaSquare) -> Decision:
    """Whether the mate of P(delta) is invertible in the localisation."""
    decision, _ = engine.invert_class(localized_mate(engine, sq))
    return decision
