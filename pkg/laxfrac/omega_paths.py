"""
Σ-paths between Σ-schemes and the 2-cells Ω they induce.

A step replaces the rectangle from a point p to the lower right corner R
by other tiles with the same top and left edges. Its Ω is obtained from
Rule 4' applied to the old and new pasted rectangles, whiskered by the
part of the right column above p and the part of the bottom row left of p.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from laxfrac.errors import BoundaryError, Decision, LaxFractionsError, NotReplaceable, PreconditionError
from laxfrac.lax_fractions import LaxFractions, SigmaCospan, TwoCellClass, TwoMorphism
from laxfrac.schemes import (Point, SigmaScheme, Tile, canonical_fill, canonical_scheme, chain,
                             classify_configuration, make_scheme, paste_tiles, region_tiles, replace_region,
                             scheme_legs, step_type, type_corner, unpadded_runs)
from laxfrac.sigma_calculus import DoubleSquare, SigmaSquare, certify, vcompose_squares

logger = logging.getLogger(__name__)

CANONICAL_SEQUENCES: Dict[str, Tuple[str, ...]] = {
    "da": ("d", "u", "s"),
    "db": ("d", "s", "u"),
    "dc": ("d", "s1", "u", "s"),
    "ua": ("u", "s", "d"),
    "ub": ("u", "d", "s"),
    "s": ("s", "d", "u"),
    "s1": ("s1", "u", "s", "d"),
}


@dataclass(frozen=True)
class SigmaStep:
    before: SigmaScheme
    after: SigmaScheme
    corner: Point
    tag: Optional[str] = None

    def reversed(self) -> "SigmaStep":
        return SigmaStep(self.after, self.before, self.corner, self.tag)


@dataclass(frozen=True)
class SigmaPath:
    start: SigmaScheme
    steps: Tuple[SigmaStep, ...] = ()

    @property
    def end(self) -> SigmaScheme:
        return self.steps[-1].after if self.steps else self.start

    def __len__(self) -> int:
        return len(self.steps)

    def then(self, step: SigmaStep) -> "SigmaPath":
        if step.before != self.end:
            raise BoundaryError("step does not start where the path ends")
        return SigmaPath(self.start, self.steps + (step,))


class PathComparison(NamedTuple):
    """``decision`` is what may be claimed; ``computed`` is what the search found."""
    decision: Decision
    computed: Decision
    proven: bool


# steps


def make_step(engine: LaxFractions, scheme: SigmaScheme, p: Point, new_tiles: Sequence[Tile],
              tag: Optional[str] = None) -> SigmaStep:
    after = replace_region(engine.model, scheme, p, new_tiles)
    return SigmaStep(scheme, after, p, tag if tag is not None else step_type(engine.model, scheme, p))


def fill_step(engine: LaxFractions, scheme: SigmaScheme, p: Point, tag: Optional[str] = None) -> SigmaStep:
    """Replace the rectangle from ``p`` by its canonical fill."""
    return make_step(engine, scheme, p, canonical_fill(engine.model, scheme, p), tag)


def coarsen_step(engine: LaxFractions, scheme: SigmaScheme, p: Point) -> SigmaStep:
    """Replace the rectangle from ``p`` by the single pasted square."""
    tiles = region_tiles(scheme, p)
    sq = paste_tiles(engine.model, tiles)
    return make_step(engine, scheme, p, [Tile(p[0], p[1], scheme.rows, scheme.cols, sq)])


def enumerate_steps(engine: LaxFractions, scheme: SigmaScheme) -> List[SigmaStep]:
    """Every fill or coarsening step available from ``scheme``."""
    steps: List[SigmaStep] = []
    for tile in scheme.tiles:
        for build in (fill_step, coarsen_step):
            try:
                step = build(engine, scheme, tile.corner)
            except NotReplaceable:
                continue
            if step.after != scheme and all(step.after != s.after or step.corner != s.corner for s in steps):
                steps.append(step)
    return steps


# Ω


def scheme_cospan(engine: LaxFractions, scheme: SigmaScheme) -> SigmaCospan:
    return engine.cospan(*scheme_legs(engine.model, scheme))


def basic_omega(engine: LaxFractions, before: SigmaSquare, after: SigmaSquare) -> TwoMorphism:
    """Ω: (k1, n1) ⇒ (k2, n2) for Σ-squares sharing their top and left edges."""
    if (before.top, before.left) != (after.top, after.left):
        raise BoundaryError("Ω needs squares with the same top and left edges")
    bundle = engine.rule4_bundle([before], [after])
    return TwoMorphism(engine.cospan(before.right, before.bottom), engine.cospan(after.right, after.bottom),
                       bundle.gammas[0], bundle.d_x, bundle.d_y, bundle.u, bundle.phi_x.delta, bundle.phi_y.delta)


def step_omega(engine: LaxFractions, step: SigmaStep) -> TwoCellClass:
    """Ω of one step, whiskered to the cospans of the two schemes."""
    m = engine.model
    scheme, p = step.before, step.corner
    old = paste_tiles(m, region_tiles(step.before, p))
    new = paste_tiles(m, region_tiles(step.after, p))
    basic = basic_omega(engine, old, new)
    above_tiles = sorted((t for t in scheme.tiles if t.right == scheme.cols and t.bottom <= p[0]),
                         key=lambda t: t.top)
    left_tiles = sorted((t for t in scheme.tiles if t.bottom == scheme.rows and t.right <= p[1]),
                        key=lambda t: t.left)
    l0 = m.compose(chain(m, [t.square.right for t in above_tiles], m.cod(scheme.f0)), scheme.f0)
    m0 = m.compose(chain(m, [t.square.bottom for t in left_tiles], m.cod(scheme.t0)), scheme.t0)
    src = engine.cospan(m.compose(old.right, l0), m.compose(old.bottom, m0))
    tgt = engine.cospan(m.compose(new.right, l0), m.compose(new.bottom, m0))
    whiskered = TwoMorphism(src, tgt, m.rw(basic.alpha, l0), basic.x1, basic.x2, m.compose(basic.x3, m0),
                            m.rw(basic.delta1, m0), m.rw(basic.delta2, m0))
    if src != scheme_cospan(engine, step.before) or tgt != scheme_cospan(engine, step.after):
        raise LaxFractionsError("whiskered Ω does not connect the cospans of its schemes")
    check = engine.validate_two_morphism(whiskered)
    if not check:
        raise LaxFractionsError(f"Ω of a step is invalid: {check.diagnosis}")
    return engine.cls(whiskered)


def omega_compose(engine: LaxFractions, second: TwoCellClass, first: TwoCellClass) -> TwoCellClass:
    return engine.vcompose(second, first)


def omega_of_path(engine: LaxFractions, path: SigmaPath) -> TwoCellClass:
    result = engine.identity_two_cell(scheme_cospan(engine, path.start))
    for step in path.steps:
        result = omega_compose(engine, step_omega(engine, step), result)
    return result


def apply_step(engine: LaxFractions, scheme: SigmaScheme, step: SigmaStep) -> Tuple[SigmaScheme, TwoCellClass]:
    if step.before != scheme:
        raise BoundaryError("step does not start at the given scheme")
    return step.after, step_omega(engine, step)


def reverse_path(engine: LaxFractions, path: SigmaPath) -> SigmaPath:
    return SigmaPath(path.end, tuple(step.reversed() for step in reversed(path.steps)))


# comparisons


def is_of_interest(engine: LaxFractions, path: SigmaPath) -> bool:
    """Every step typed and every scheme on the path a configuration of interest."""
    m = engine.model
    schemes = [path.start] + [step.after for step in path.steps]
    return (all(step.tag is not None for step in path.steps)
            and all(classify_configuration(m, s) for s in schemes))


def paths_equivalent(engine: LaxFractions, p1: SigmaPath, p2: SigmaPath,
                     bound: Optional[int] = None) -> PathComparison:
    """Compare the Ω of two paths with the same endpoints.

    A positive answer is only claimed for identical paths, paths of length
    at most two and paths of interest; otherwise it is reported as
    undetermined.
    """
    if p1.start != p2.start or p1.end != p2.end:
        raise BoundaryError("paths do not share their endpoints")
    verdict = engine.are_equivalent(omega_of_path(engine, p1).representative,
                                    omega_of_path(engine, p2).representative, bound)
    proven = (p1 == p2 or (len(p1) <= 2 and len(p2) <= 2)
              or (is_of_interest(engine, p1) and is_of_interest(engine, p2)))
    if proven or verdict.decision is not Decision.YES:
        return PathComparison(verdict.decision, verdict.decision, proven)
    return PathComparison(Decision.UNDETERMINED, verdict.decision, proven)


def length_two_pairs(engine: LaxFractions, scheme: SigmaScheme) -> List[Tuple[SigmaPath, SigmaPath]]:
    """Pairs of distinct paths of length at most two from ``scheme`` ending at the same scheme."""
    start = SigmaPath(scheme)
    paths = [start]
    for first in enumerate_steps(engine, scheme):
        one = start.then(first)
        paths.append(one)
        paths.extend(one.then(second) for second in enumerate_steps(engine, first.after))
    return [(a, b) for a, b in combinations(paths, 2) if a.end == b.end]


# canonical paths


def canonical_path(engine: LaxFractions, scheme: SigmaScheme, tag: str) -> SigmaPath:
    """The fixed path of a configuration of interest to its canonical scheme."""
    m = engine.model
    if tag not in classify_configuration(m, scheme):
        raise PreconditionError(f"scheme is not a configuration of type {tag}")
    path = SigmaPath(scheme)
    for step_tag in CANONICAL_SEQUENCES[tag]:
        current = path.end
        path = path.then(fill_step(engine, current, type_corner(m, current, step_tag), step_tag))
    target = canonical_scheme(m, scheme.runs, scheme.f0, scheme.t0)
    if path.end != target:
        raise LaxFractionsError(f"canonical path of type {tag} does not end at the canonical scheme")
    return path


def canonicalize(engine: LaxFractions, scheme: SigmaScheme) -> SigmaPath:
    """A path to the canonical scheme filling the corners B_1, ..., B_n top down."""
    m = engine.model
    target = canonical_scheme(m, scheme.runs, scheme.f0, scheme.t0)
    path = SigmaPath(scheme)
    for _ in range(4 * (len(scheme.tiles) + scheme.level)):
        if path.end == target:
            return path
        for corner in path.end.corners():
            try:
                step = fill_step(engine, path.end, corner)
            except NotReplaceable:
                continue
            if step.after != path.end:
                path = path.then(step)
                break
        else:
            break
    if path.end != target:
        raise LaxFractionsError("scheme could not be brought to its canonical form")
    return path


# paths behind horizontal composition and the associator


def horizontal_omega_path(engine: LaxFractions, a: TwoMorphism, b: TwoMorphism, inserted: DoubleSquare,
                          first: bool) -> SigmaPath:
    """Path from the canonical scheme of (r_i, g_i, s_i, 1) to the scheme of the middle cospan.

    ``first`` selects the source side (i = 1) or the target side (i = 2).
    """
    m = engine.model
    if first:
        r, f, sq_alpha, rule6 = a.src.r, a.src.f, a.square1(m), inserted.sq_f
        g, s, sq_beta = b.src.f, b.src.r, b.square1(m)
    else:
        r, f, sq_alpha, rule6 = a.tgt.r, a.tgt.f, a.square2(m), inserted.sq_g
        g, s, sq_beta = b.tgt.f, b.tgt.r, b.square2(m)
    one = m.id1(m.dom(s))
    start = canonical_scheme(m, unpadded_runs([r, g, s, one]), f, one)
    r_dot = start.tile_at((0, 1)).square.bottom
    lower = [Tile(1, 0, 2, 1, sq_beta),
             Tile(1, 1, 2, 2, certify(m, m.canonical_square(r_dot, sq_beta.right), "canonical square"))]
    step_d = make_step(engine, start, (1, 0), lower, "d")
    column = Tile(0, 1, 2, 2, vcompose_squares(m, rule6, sq_alpha))
    step_u = make_step(engine, step_d.after, (0, 1), [column], "u")
    return SigmaPath(start, (step_d, step_u))


def associator_path(engine: LaxFractions, f_bar: SigmaCospan, g_bar: SigmaCospan,
                    h_bar: SigmaCospan) -> SigmaPath:
    """(h∘g)∘f → canonical → h∘(g∘f) over the border (r, g, s, h) whiskered by f and t."""
    m = engine.model
    if f_bar.target != g_bar.source or g_bar.target != h_bar.source:
        raise BoundaryError("cospans do not chain")
    runs = unpadded_runs([f_bar.r, g_bar.f, g_bar.r, h_bar.f])
    middle = canonical_scheme(m, runs, f_bar.f, h_bar.r)
    can_rg = middle.tile_at((0, 1)).square
    can_sh = middle.tile_at((1, 0)).square
    column = certify(m, m.canonical_square(f_bar.r, m.compose(can_sh.right, g_bar.f)), "canonical square")
    first = make_scheme(runs, [Tile(1, 0, 2, 1, can_sh), Tile(0, 1, 2, 2, column)], f_bar.f, h_bar.r)
    wide = certify(m, m.canonical_square(m.compose(can_rg.bottom, g_bar.r), h_bar.f), "canonical square")
    step_u = fill_step(engine, first, (0, 1), "u")
    if step_u.after != middle:
        raise LaxFractionsError("associator path does not reach the canonical scheme")
    step_d = make_step(engine, middle, (1, 0), [Tile(1, 0, 2, 2, wide)], "d")
    path = SigmaPath(first, (step_u, step_d))
    expected = (engine.compose_cospans(engine.compose_cospans(h_bar, g_bar), f_bar),
                engine.compose_cospans(h_bar, engine.compose_cospans(g_bar, f_bar)))
    if (scheme_cospan(engine, path.start), scheme_cospan(engine, path.end)) != expected:
        raise LaxFractionsError("associator schemes do not present the bracketed composites")
    return path
