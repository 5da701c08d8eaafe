"""
Σ-squares, the axioms of a left calculus of lax fractions, and the rules derived from them.

Orientation used throughout: a Σ-square has top r: B→I in Σ, left u: B→B',
right v: I→I', bottom s: B'→I' in Σ and an invertible delta: s∘u ⇒ v∘r.
It is stored as the arrow-category morphism (u, v, delta): r → s.

Every provider returns witnesses that have been re-validated; a model
shortcut is tried first and bounded search is the fallback.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple

from laxfrac.errors import (BoundaryError, BoundExhausted, LaxFractionsError, NotASquare, NotFound,
                            PreconditionError)
from laxfrac.two_cat_core import ArrowCatMorphism, LocallyPosetalModel, OneCell, TwoCatModel, TwoCell

logger = logging.getLogger(__name__)

SigmaSquare = ArrowCatMorphism


class SquareCheck(NamedTuple):
    ok: bool
    diagnosis: str = ""

    def __bool__(self) -> bool:
        return self.ok


def make_square(model: TwoCatModel, top: OneCell, left: OneCell, right: OneCell, bottom: OneCell,
                delta: Optional[TwoCell] = None) -> SigmaSquare:
    """Assemble a square, finding an invertible delta: bottom∘left ⇒ right∘top when none is given."""
    if delta is None:
        source, target = model.compose(bottom, left), model.compose(right, top)
        delta = model.find_invertible(source, target)
        if delta is None:
            raise NotASquare(f"no invertible 2-cell {source!r} => {target!r}")
    return ArrowCatMorphism(top, bottom, left, right, delta)


def validate_square(model: TwoCatModel, sq: SigmaSquare) -> SquareCheck:
    """Check every Σ-square invariant, naming the first that fails."""
    r, s, u, v, delta = sq.top, sq.bottom, sq.left, sq.right, sq.delta
    if model.dom(r) != model.dom(u):
        return SquareCheck(False, "top and left do not share a domain")
    if model.cod(u) != model.dom(s):
        return SquareCheck(False, "left does not end where bottom starts")
    if model.cod(r) != model.dom(v):
        return SquareCheck(False, "top does not end where right starts")
    if model.cod(v) != model.cod(s):
        return SquareCheck(False, "right and bottom do not share a codomain")
    if delta.source != model.compose(s, u) or delta.target != model.compose(v, r):
        return SquareCheck(False, "delta boundary")
    if not any(model.eq2(delta, cell) for cell in model.two_cells(delta.source, delta.target)):
        return SquareCheck(False, "delta is not a 2-cell of the model")
    if not model.is_invertible(delta):
        return SquareCheck(False, "delta not invertible")
    if not model.in_sigma(r):
        return SquareCheck(False, "top not in Σ")
    if not model.in_sigma(s):
        return SquareCheck(False, "bottom not in Σ")
    try:
        member = model.square_in_sigma(sq)
    except NotASquare as exc:
        return SquareCheck(False, f"not a square: {exc}")
    if not member:
        return SquareCheck(False, "Σ-membership")
    return SquareCheck(True)


def certify(model: TwoCatModel, sq: SigmaSquare, what: str) -> SigmaSquare:
    check = validate_square(model, sq)
    if not check:
        raise LaxFractionsError(f"{what} failed validation: {check.diagnosis}")
    return sq


# squares given by the axioms


def identity_axiom_square(model: TwoCatModel, s: OneCell) -> SigmaSquare:
    """(top 1_X, left 1_X, right s, bottom s) for a Σ-object s: X→Y."""
    one = model.id1(model.dom(s))
    return ArrowCatMorphism(one, s, one, s, model.id2(s))


def unit_square(model: TwoCatModel, s: OneCell) -> SigmaSquare:
    """(top s, left 1, right 1, bottom s): the identity of s in Σ."""
    return ArrowCatMorphism(s, s, model.id1(model.dom(s)), model.id1(model.cod(s)), model.id2(s))


def vertical_repletion_square(model: TwoCatModel, delta: TwoCell) -> SigmaSquare:
    """(top s, left 1, right 1, bottom r) for an invertible delta: r ⇒ s."""
    r, s = delta.source, delta.target
    return ArrowCatMorphism(s, r, model.id1(model.dom(r)), model.id1(model.cod(r)), delta)


def horizontal_repletion_square(model: TwoCatModel, gamma: TwoCell) -> SigmaSquare:
    """(top 1, left f, right g, bottom 1) for an invertible gamma: f ⇒ g."""
    f, g = gamma.source, gamma.target
    return ArrowCatMorphism(model.id1(model.dom(f)), model.id1(model.cod(f)), f, g, gamma)


def identity_sided_square(model: TwoCatModel, s: OneCell, d: OneCell) -> SigmaSquare:
    """(top s, left 1, right d, bottom d∘s) with the identity 2-cell."""
    ds = model.compose(d, s)
    return ArrowCatMorphism(s, ds, model.id1(model.dom(s)), d, model.id2(ds))


# pasting (Rule 1 and the Composition axiom)


def vcompose_squares(model: TwoCatModel, q2: SigmaSquare, q1: SigmaSquare) -> SigmaSquare:
    """q1 stacked on top of q2: (u'u, v'v, (v'∘δ)·(δ'∘u))."""
    if q1.bottom != q2.top:
        raise BoundaryError(f"bottom {q1.bottom!r} of the upper square differs from top {q2.top!r}")
    delta = model.vcomp(model.lw(q2.right, q1.delta), model.rw(q2.delta, q1.left))
    return ArrowCatMorphism(q1.top, q2.bottom, model.compose(q2.left, q1.left),
                            model.compose(q2.right, q1.right), delta)


def hcompose_squares(model: TwoCatModel, q1: SigmaSquare, q3: SigmaSquare) -> SigmaSquare:
    """q1 placed left of q3: top r3∘r1, bottom s3∘s1, delta (δ3∘r1)·(s3∘δ1)."""
    if q1.right != q3.left:
        raise BoundaryError(f"right edge {q1.right!r} differs from left edge {q3.left!r}")
    delta = model.vcomp(model.rw(q3.delta, q1.top), model.lw(q3.bottom, q1.delta))
    return ArrowCatMorphism(model.compose(q3.top, q1.top), model.compose(q3.bottom, q1.bottom),
                            q1.left, q3.right, delta)


def paste_grid(model: TwoCatModel, rows: Sequence[Sequence[SigmaSquare]]) -> SigmaSquare:
    """Paste a rectangular grid given row by row, top row first."""
    pasted_rows = []
    for row in rows:
        acc = row[0]
        for sq in row[1:]:
            acc = hcompose_squares(model, acc, sq)
        pasted_rows.append(acc)
    result = pasted_rows[0]
    for lower in pasted_rows[1:]:
        result = vcompose_squares(model, lower, result)
    return result


# existential axioms


@dataclass(frozen=True)
class EquiInsertionWitness:
    d: OneCell
    alpha_prime: TwoCell
    square: SigmaSquare


def _search_square(model: TwoCatModel, r: OneCell, f: OneCell, bound: int) -> SigmaSquare:
    for w in model.search_objects(bound):
        for s_prime in model.one_cells(model.cod(f), w):
            if not model.in_sigma(s_prime):
                continue
            for f_prime in model.one_cells(model.cod(r), w):
                delta = model.find_invertible(model.compose(s_prime, f), model.compose(f_prime, r))
                if delta is None:
                    continue
                candidate = ArrowCatMorphism(r, s_prime, f, f_prime, delta)
                if validate_square(model, candidate):
                    return candidate
    raise BoundExhausted("no Σ-square completes the span", bound, (r, f))


def square(model: TwoCatModel, r: OneCell, f: OneCell, bound: int) -> SigmaSquare:
    """Square axiom: a Σ-square (top r, left f, right f', bottom s') for the span (r, f)."""
    if not model.in_sigma(r):
        raise PreconditionError(f"{r!r} is not a Σ-object")
    if model.dom(r) != model.dom(f):
        raise BoundaryError(f"span legs {r!r} and {f!r} have different domains")
    candidate = model.square_witness(r, f, bound)
    if candidate is None:
        candidate = _search_square(model, r, f, bound)
    return certify(model, candidate, "Square witness")


def equi_insertion(model: TwoCatModel, sq: SigmaSquare, g: OneCell, alpha: TwoCell,
                   bound: int) -> EquiInsertionWitness:
    """Equi-insertion: d with (top s, left 1, right d, bottom ds) in Σ and alpha' with d∘alpha = alpha'∘r.

    ``sq`` is the Σ-square (top r, left f, right f', bottom s) and alpha: f'r ⇒ gr.
    """
    r, f_prime = sq.top, sq.right
    if alpha.source != model.compose(f_prime, r) or alpha.target != model.compose(g, r):
        raise PreconditionError(f"2-cell {alpha!r} does not go from f'r to gr")
    found = model.equi_insertion_witness(sq, g, alpha, bound)
    if found is not None:
        d, alpha_prime = found
    else:
        d, alpha_prime = _search_equi_insertion(model, sq, g, alpha, bound)
    witness = EquiInsertionWitness(d, alpha_prime,
                                   certify(model, identity_sided_square(model, sq.bottom, d),
                                           "Equi-insertion square"))
    if not model.eq2(model.lw(d, alpha), model.rw(alpha_prime, r)):
        raise LaxFractionsError("Equi-insertion witness violates d∘alpha = alpha'∘r")
    return witness


def _search_equi_insertion(model: TwoCatModel, sq: SigmaSquare, g: OneCell, alpha: TwoCell,
                           bound: int) -> Tuple[OneCell, TwoCell]:
    r, f_prime, s = sq.top, sq.right, sq.bottom
    for e in model.search_objects(bound):
        for d in model.one_cells(model.cod(s), e):
            if not validate_square(model, identity_sided_square(model, s, d)):
                continue
            target = model.lw(d, alpha)
            for alpha_prime in model.two_cells(model.compose(d, f_prime), model.compose(d, g)):
                if model.eq2(model.rw(alpha_prime, r), target):
                    return d, alpha_prime
    raise BoundExhausted("no Equi-insertion witness", bound, (sq, g))


def equification(model: TwoCatModel, sq: SigmaSquare, alpha: TwoCell, beta: TwoCell, bound: int) -> OneCell:
    """Equification: d with (top s, left 1, right d, bottom ds) in Σ and d∘alpha = d∘beta."""
    r = sq.top
    if alpha.source != beta.source or alpha.target != beta.target:
        raise BoundaryError("Equification needs parallel 2-cells")
    if not model.eq2(model.rw(alpha, r), model.rw(beta, r)):
        raise PreconditionError("alpha∘r and beta∘r differ")
    d = model.equification_witness(sq, alpha, beta, bound)
    if d is None or not model.eq2(model.lw(d, alpha), model.lw(d, beta)):
        d = _search_equification(model, sq, alpha, beta, bound)
    certify(model, identity_sided_square(model, sq.bottom, d), "Equification square")
    return d


def _search_equification(model: TwoCatModel, sq: SigmaSquare, alpha: TwoCell, beta: TwoCell,
                         bound: int) -> OneCell:
    s = sq.bottom
    for e in model.search_objects(bound):
        for d in model.one_cells(model.cod(s), e):
            if (model.eq2(model.lw(d, alpha), model.lw(d, beta))
                    and validate_square(model, identity_sided_square(model, s, d))):
                return d
    raise BoundExhausted("no Equification witness", bound, sq)


# derived rules


def rule2(model: TwoCatModel, r: OneCell, s: OneCell) -> SigmaSquare:
    """(top r, left 1, right s, bottom s∘r) for composable r, s in Σ."""
    if not (model.in_sigma(r) and model.in_sigma(s)):
        raise PreconditionError("Rule 2 needs r and s in Σ")
    pasted = hcompose_squares(model, unit_square(model, r), identity_axiom_square(model, s))
    return certify(model, pasted, "Rule 2 square")


def rule3(model: TwoCatModel, q: SigmaSquare) -> Tuple[SigmaSquare, SigmaSquare]:
    """From q = (top r, left s in Σ, right u, bottom t) derive (r, 1, u, ts) and (s, 1, t, ts)."""
    check = validate_square(model, q)
    if not check:
        raise PreconditionError(f"Rule 3 hypothesis is not a Σ-square: {check.diagnosis}")
    r, s, u, t = q.top, q.left, q.right, q.bottom
    if not model.in_sigma(s):
        raise PreconditionError(f"left edge {s!r} is not a Σ-object")
    ts = model.compose(t, s)
    first = ArrowCatMorphism(r, ts, model.id1(model.dom(r)), u, q.delta)
    second = ArrowCatMorphism(s, ts, model.id1(model.dom(s)), t, model.id2(ts))
    return certify(model, first, "Rule 3 square"), certify(model, second, "Rule 3 square")


def rule2_3_derive(model: TwoCatModel, q: SigmaSquare,
                   s: Optional[OneCell] = None) -> Tuple[SigmaSquare, SigmaSquare]:
    """Rule 3 on q, read as a derivation from its left edge ``s``."""
    if s is not None and s != q.left:
        raise PreconditionError(f"{s!r} is not the left edge of the Rule 3 hypothesis")
    return rule3(model, q)


@dataclass(frozen=True)
class InsertionWitness:
    """d with its identity-sided Σ-square and an invertible gamma (Rules 4a and 4b)."""
    d: OneCell
    square: SigmaSquare
    gamma: Optional[TwoCell] = None


def rule4a(model: TwoCatModel, sq: SigmaSquare, alpha: TwoCell, beta: TwoCell, bound: int) -> InsertionWitness:
    """Make alpha: a ⇒ b invertible with inverse beta after a Σ-extension.

    Needs (beta·alpha)∘r = id∘r and (alpha·beta)∘r = id∘r where r is the top of ``sq``.
    """
    a, b = alpha.source, alpha.target
    d1 = equification(model, sq, model.vcomp(beta, alpha), model.id2(a), bound)
    step1 = identity_sided_square(model, sq.bottom, d1)
    sq1 = vcompose_squares(model, step1, sq)
    d2 = equification(model, sq1, model.lw(d1, model.vcomp(alpha, beta)), model.id2(model.compose(d1, b)), bound)
    d = model.compose(d2, d1)
    gamma = model.lw(d, alpha)
    if not model.is_invertible(gamma):
        raise LaxFractionsError("Rule 4a output is not invertible")
    return InsertionWitness(d, certify(model, identity_sided_square(model, sq.bottom, d), "Rule 4a square"), gamma)


def rule4b(model: TwoCatModel, q_a: SigmaSquare, q_b: SigmaSquare, bound: int) -> InsertionWitness:
    """For Σ-squares (r, f, a, s, δ) and (r, f, b, s, ε): d and invertible γ: da ⇒ db with (γ∘r)·(d∘δ) = d∘ε."""
    if (q_a.top, q_a.left, q_a.bottom) != (q_b.top, q_b.left, q_b.bottom):
        raise BoundaryError("Rule 4b squares must share top, left and bottom edges")
    r, s = q_a.top, q_a.bottom
    a, b = q_a.right, q_b.right
    forward = model.vcomp(q_b.delta, model.inverse(q_a.delta))
    backward = model.vcomp(q_a.delta, model.inverse(q_b.delta))

    first = equi_insertion(model, q_a, b, forward, bound)
    d1 = first.d
    q_b1 = vcompose_squares(model, first.square, q_b)
    second = equi_insertion(model, q_b1, model.compose(d1, a), model.lw(d1, backward), bound)
    d2 = second.d
    d21 = model.compose(d2, d1)
    q_a21 = vcompose_squares(model, identity_sided_square(model, s, d21), q_a)
    third = rule4a(model, q_a21, model.lw(d2, first.alpha_prime), second.alpha_prime, bound)
    d = model.compose(third.d, d21)
    gamma = model.lw(third.d, model.lw(d2, first.alpha_prime))
    lhs = model.vcomp(model.rw(gamma, r), model.lw(d, q_a.delta))
    if not model.eq2(lhs, model.lw(d, q_b.delta)):
        raise LaxFractionsError("Rule 4b pasting equality fails")
    return InsertionWitness(d, certify(model, identity_sided_square(model, s, d), "Rule 4b square"), gamma)


@dataclass(frozen=True)
class WitnessBundle:
    """Output of Rule 4': extensions d_x, d_y, the Σ-object u, certifying squares and the γ_i.

    phi_x = (top x3, left 1, right d_x, bottom u), phi_y = (top y3, left 1, right d_y, bottom u),
    and gammas[i]: d_x x_i ⇒ d_y y_i.
    """
    d_x: OneCell
    d_y: OneCell
    u: OneCell
    phi_x: SigmaSquare
    phi_y: SigmaSquare
    gammas: Tuple[TwoCell, ...] = field(default_factory=tuple)


def check_rule4_bundle(model: TwoCatModel, bundle: WitnessBundle, xs: Sequence[SigmaSquare],
                       ys: Sequence[SigmaSquare]) -> SquareCheck:
    for sq in (bundle.phi_x, bundle.phi_y):
        check = validate_square(model, sq)
        if not check:
            return SquareCheck(False, f"certifying square: {check.diagnosis}")
    if bundle.phi_x.bottom != bundle.u or bundle.phi_y.bottom != bundle.u:
        return SquareCheck(False, "certifying squares do not end at u")
    for p, q, gamma in zip(xs, ys, bundle.gammas):
        if not model.is_invertible(gamma):
            return SquareCheck(False, "gamma not invertible")
        left = vcompose_squares(model, bundle.phi_x, p)
        right = vcompose_squares(model, bundle.phi_y, q)
        if not model.eq2(model.vcomp(model.rw(gamma, p.top), left.delta), right.delta):
            return SquareCheck(False, "pasting equality")
    return SquareCheck(True)


def rule4_prime(model: TwoCatModel, xs: Sequence[SigmaSquare], ys: Sequence[SigmaSquare],
                bound: int) -> WitnessBundle:
    """Common Σ-extension of two families of Σ-squares.

    xs[i] = (top r_i, left b_i, right x_i, bottom x3) and ys[i] = (top r_i, left b_i, right y_i, bottom y3);
    the left edge is usually an identity.
    """
    if len(xs) != len(ys):
        raise BoundaryError("Rule 4' needs the same number of squares on both sides")
    if not xs:
        raise PreconditionError("Rule 4' needs at least one pair of squares")
    x3, y3 = xs[0].bottom, ys[0].bottom
    for p, q in zip(xs, ys):
        if p.top != q.top or p.left != q.left or p.bottom != x3 or q.bottom != y3:
            raise BoundaryError("Rule 4' squares do not share the described borders")
        for sq in (p, q):
            check = validate_square(model, sq)
            if not check:
                raise PreconditionError(f"Rule 4' input is not a Σ-square: {check.diagnosis}")

    if isinstance(model, LocallyPosetalModel):
        try:
            found = model.joint_cocone([p.right for p in xs], [q.right for q in ys], x3, y3)
        except NotImplementedError:
            found = None
        if found is not None:
            d_x, d_y = found
            u = model.compose(d_x, x3)
            bundle = WitnessBundle(
                d_x, d_y, u, identity_sided_square(model, x3, d_x),
                ArrowCatMorphism(y3, u, model.id1(model.dom(y3)), d_y, model.id2(u)),
                tuple(model.id2(model.compose(d_x, p.right)) for p in xs))
            if check_rule4_bundle(model, bundle, xs, ys):
                return bundle
            logger.debug("joint cocone rejected, using the constructive chain")

    return _rule4_chain(model, xs, ys, bound)


def _rule4_chain(model: TwoCatModel, xs: Sequence[SigmaSquare], ys: Sequence[SigmaSquare],
                 bound: int) -> WitnessBundle:
    x3, y3 = xs[0].bottom, ys[0].bottom
    start = square(model, x3, y3, bound)
    phi_x, phi_y = rule3(model, start)
    e_x, e_y = start.right, start.bottom
    gammas: List[TwoCell] = []
    for p, q in zip(xs, ys):
        found = rule4b(model, vcompose_squares(model, phi_x, p), vcompose_squares(model, phi_y, q), bound)
        d = found.d
        u = phi_x.bottom
        step = identity_sided_square(model, u, d)
        phi_x = vcompose_squares(model, step, phi_x)
        phi_y = vcompose_squares(model, step, phi_y)
        e_x, e_y = model.compose(d, e_x), model.compose(d, e_y)
        gammas = [model.lw(d, gamma) for gamma in gammas] + [found.gamma]
    bundle = WitnessBundle(e_x, e_y, phi_x.bottom, phi_x, phi_y, tuple(gammas))
    check = check_rule4_bundle(model, bundle, xs, ys)
    if not check:
        raise LaxFractionsError(f"Rule 4' bundle failed validation: {check.diagnosis}")
    return bundle


def rule4(model: TwoCatModel, pair1: Tuple[SigmaSquare, SigmaSquare], pair2: Tuple[SigmaSquare, SigmaSquare],
          bound: int) -> WitnessBundle:
    """Rule 4 for two pairs of squares (x-side, y-side) over the tops r and s."""
    return rule4_prime(model, [pair1[0], pair2[0]], [pair1[1], pair2[1]], bound)


@dataclass(frozen=True)
class DoubleSquare:
    """Rules 5 and 6: squares (v, f, ·, w) and (v, g, ·, w) sharing the bottom w."""
    w: OneCell
    sq_f: SigmaSquare
    sq_g: SigmaSquare
    beta_prime: Optional[TwoCell] = None


def rule5_double_square(model: TwoCatModel, v: OneCell, f: OneCell, g: OneCell, bound: int) -> DoubleSquare:
    if model.dom(f) != model.dom(v) or model.dom(g) != model.dom(v):
        raise BoundaryError("Rule 5 spans must share their domain")
    sq_f = square(model, v, f, bound)
    if f == g:
        return DoubleSquare(sq_f.bottom, sq_f, sq_f)
    sq_g = square(model, v, g, bound)
    joint = square(model, sq_f.bottom, sq_g.bottom, bound)
    first, second = rule3(model, joint)
    return DoubleSquare(first.bottom, vcompose_squares(model, first, sq_f),
                        vcompose_squares(model, second, sq_g))


def rule6_insert(model: TwoCatModel, v: OneCell, f: OneCell, g: OneCell, beta: TwoCell,
                 bound: int) -> DoubleSquare:
    """Rule 5 data together with beta': df ⇒ dg satisfying ε·(w∘β) = (β'∘v)·δ."""
    if beta.source != f or beta.target != g:
        raise BoundaryError(f"2-cell {beta!r} does not go from f to g")
    bar = rule5_double_square(model, v, f, g, bound)
    mu = model.vcomp(bar.sq_g.delta, model.lw(bar.w, beta), model.inverse(bar.sq_f.delta))
    inserted = equi_insertion(model, bar.sq_f, bar.sq_g.right, mu, bound)
    sq_f = vcompose_squares(model, inserted.square, bar.sq_f)
    sq_g = vcompose_squares(model, inserted.square, bar.sq_g)
    result = DoubleSquare(inserted.square.bottom, sq_f, sq_g, inserted.alpha_prime)
    lhs = model.vcomp(sq_g.delta, model.lw(result.w, beta))
    rhs = model.vcomp(model.rw(result.beta_prime, v), sq_f.delta)
    if not model.eq2(lhs, rhs):
        raise LaxFractionsError("Rule 6 pasting equality fails")
    return result


# axiom checks


@dataclass
class AxiomResult:
    name: str
    instances: int = 0
    failures: List[str] = field(default_factory=list)
    exhausted: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures and not self.exhausted


def sigma_objects(model: TwoCatModel, bound: int) -> List[OneCell]:
    return [f for f in model.all_one_cells(bound) if model.in_sigma(f)]


def all_sigma_squares(model: TwoCatModel, bound: int) -> List[SigmaSquare]:
    """Every Σ-square whose corners lie in the searched objects, in canonical order."""
    found = []
    sigma = sigma_objects(model, bound)
    for r, s in product(sigma, sigma):
        for u, v in product(model.one_cells(model.dom(r), model.dom(s)), model.one_cells(model.cod(r), model.cod(s))):
            for delta in model.two_cells(model.compose(s, u), model.compose(v, r)):
                if not model.is_invertible(delta):
                    continue
                candidate = ArrowCatMorphism(r, s, u, v, delta)
                if validate_square(model, candidate):
                    found.append(candidate)
    return found


def _run(result: AxiomResult, label: str, check: Callable[[], bool]) -> None:
    result.instances += 1
    try:
        if not check():
            result.failures.append(label)
    except BoundExhausted as exc:
        result.exhausted += 1
        logger.warning(f"{result.name}: {label}: {exc}")
    except (NotFound, PreconditionError, LaxFractionsError) as exc:
        result.failures.append(f"{label}: {exc}")


def check_axioms(model: TwoCatModel, bound: int, witness_bound: Optional[int] = None) -> List[AxiomResult]:
    """Verdict per axiom over every instance whose objects lie within ``bound``."""
    witness_bound = witness_bound or bound
    objs = model.search_objects(bound)
    cells = model.all_one_cells(bound)
    sigma = [f for f in cells if model.in_sigma(f)]
    squares = all_sigma_squares(model, bound)
    results = []

    identity = AxiomResult("Identity")
    for a in objs:
        _run(identity, f"identity of {a!r} in Σ", lambda a=a: model.in_sigma(model.id1(a)))
    for s in sigma:
        _run(identity, f"identity square on {s!r}",
             lambda s=s: bool(validate_square(model, identity_axiom_square(model, s))))
    results.append(identity)

    vertical = AxiomResult("Vertical Repletion")
    horizontal = AxiomResult("Horizontal Repletion")
    for f, g in product(cells, cells):
        if (model.dom(f), model.cod(f)) != (model.dom(g), model.cod(g)):
            continue
        for gamma in model.two_cells(f, g):
            if not model.is_invertible(gamma):
                continue
            if model.in_sigma(f):
                _run(vertical, f"repletion of {f!r} along {gamma!r}",
                     lambda gamma=gamma, g=g: model.in_sigma(g)
                     and bool(validate_square(model, vertical_repletion_square(model, gamma))))
            _run(horizontal, f"repletion square for {gamma!r}",
                 lambda gamma=gamma: bool(validate_square(model, horizontal_repletion_square(model, gamma))))
    results.extend([vertical, horizontal])

    composition = AxiomResult("Composition")
    for q1, q2 in product(squares, squares):
        if q1.right == q2.left:
            _run(composition, f"horizontal pasting of {q1!r} and {q2!r}",
                 lambda q1=q1, q2=q2: bool(validate_square(model, hcompose_squares(model, q1, q2))))
        if q1.bottom == q2.top:
            _run(composition, f"vertical pasting of {q1!r} and {q2!r}",
                 lambda q1=q1, q2=q2: bool(validate_square(model, vcompose_squares(model, q2, q1))))
    results.append(composition)

    square_axiom = AxiomResult("Square")
    for r in sigma:
        for f in cells:
            if model.dom(f) == model.dom(r):
                _run(square_axiom, f"span ({r!r}, {f!r})",
                     lambda r=r, f=f: _square_ok(model, r, f, witness_bound))
    results.append(square_axiom)

    insertion = AxiomResult("Equi-insertion")
    equify = AxiomResult("Equification")
    for sq in squares:
        r = sq.top
        for g in model.one_cells(model.cod(r), model.cod(sq.bottom)):
            for alpha in model.two_cells(model.compose(sq.right, r), model.compose(g, r)):
                _run(insertion, f"{sq!r} with {alpha!r}",
                     lambda sq=sq, g=g, alpha=alpha: equi_insertion(model, sq, g, alpha, witness_bound) is not None)
        hom = model.one_cells(model.cod(r), model.cod(sq.bottom))
        for a, b in product(hom, hom):
            for alpha, beta in product(model.two_cells(a, b), repeat=2):
                if model.eq2(model.rw(alpha, r), model.rw(beta, r)):
                    _run(equify, f"{sq!r} with {alpha!r}, {beta!r}",
                         lambda sq=sq, alpha=alpha, beta=beta: equification(model, sq, alpha, beta, witness_bound)
                         is not None)
    results.extend([insertion, equify])

    for result in results:
        logger.info(f"{model.name}: {result.name}: {result.instances} instances, "
                    f"{len(result.failures)} failures, {result.exhausted} exhausted")
    return results


def _square_ok(model: TwoCatModel, r: OneCell, f: OneCell, bound: int) -> bool:
    sq = square(model, r, f, bound)
    return sq.top == r and sq.left == f
