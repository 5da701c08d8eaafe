"""
The order-enriched model: finite posets, monotone maps, pointwise order.

Σ consists of the embeddings (injective, order-reflecting monotone maps)
and of the commuting squares between them satisfying

    if n(z) ≤ v(y) then z ≤ u(x) and m(x) ≤ y for some x

for a square with top m, bottom n, left u and right v.
"""

import logging
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from laxfrac.errors import BoundExhausted, NotASquare, PreconditionError
from laxfrac.models.posets import (FinitePoset, MonotoneMap, enumerate_monotone_maps,
                                   posets_up_to, quotient_preorder, reflexive_transitive_closure)
from laxfrac.two_cat_core import ArrowCatMorphism, LocallyPosetalModel, TwoCell

logger = logging.getLogger(__name__)


def _idx(f: MonotoneMap) -> np.ndarray:
    return np.asarray(f.assignment, dtype=np.intp)


def pos_is_embedding(m: MonotoneMap) -> bool:
    return m.is_embedding()


def commutes(sq: ArrowCatMorphism) -> bool:
    return sq.target.after(sq.u) == sq.v.after(sq.source)


def sigma_condition_elementwise(sq: ArrowCatMorphism) -> bool:
    m, n, u, v = sq.source, sq.target, sq.u, sq.v
    i_poset, b2_poset = m.cod, n.dom
    hypothesis = n.cod.leq[np.ix_(_idx(n), _idx(v))]
    upper = b2_poset.leq[:, _idx(u)].astype(np.int64)
    lower = i_poset.leq[_idx(m), :].astype(np.int64)
    witnessed = (upper @ lower) > 0
    return not bool((hypothesis & ~witnessed).any())


def sigma_condition_lower_sets(sq: ArrowCatMorphism) -> bool:
    m, n, u, v = sq.source, sq.target, sq.u, sq.v
    return all(u.image_down(m.preimage(lower)) == n.preimage(v.image_down(lower))
               for lower in m.cod.lower_sets)


def pos_square_in_sigma(sq: ArrowCatMorphism, method: str = "elementwise") -> bool:
    """Σ-membership of a square over Pos.

    Raises NotASquare when the square does not commute on the nose.
    """
    if not commutes(sq):
        raise NotASquare(f"square does not commute: {sq.target!r}∘{sq.u!r} != {sq.v!r}∘{sq.source!r}")
    if not (sq.source.is_embedding() and sq.target.is_embedding()):
        return False
    if method == "elementwise":
        return sigma_condition_elementwise(sq)
    if method == "lower_sets":
        return sigma_condition_lower_sets(sq)
    raise ValueError(f"unknown method {method!r}")


def _colimit(posets: Sequence[FinitePoset], prefixes: Sequence[str],
             glue: Sequence[Tuple[int, int, int, int]]) -> Tuple[FinitePoset, List[MonotoneMap]]:
    """Colimit of a disjoint union of posets with identifications.

    ``glue`` holds (poset_a, element_a, poset_b, element_b) quadruples to identify.
    Returns the quotient poset and the injection of every summand.
    """
    offsets, total = [], 0
    for poset in posets:
        offsets.append(total)
        total += poset.n
    names = [f"{prefix}:{name}" for prefix, poset in zip(prefixes, posets) for name in poset.elements]
    rel = np.zeros((total, total), dtype=bool)
    for offset, poset in zip(offsets, posets):
        rel[offset:offset + poset.n, offset:offset + poset.n] = poset.leq
    for pa, ea, pb, eb in glue:
        a, b = offsets[pa] + ea, offsets[pb] + eb
        rel[a, b] = rel[b, a] = True
    quotient, cls_of = quotient_preorder(names, reflexive_transitive_closure(rel))
    injections = [MonotoneMap(poset, quotient, cls_of[offset:offset + poset.n], check=False)
                  for offset, poset in zip(offsets, posets)]
    return quotient, injections


def pushout_square(r: MonotoneMap, g: MonotoneMap) -> ArrowCatMorphism:
    """The pushout of I ←r− B −g→ B' as a square (top r, left g, right ġ, bottom ṙ)."""
    _, (g_dot, r_dot) = _colimit([r.cod, g.cod], ["i", "b"],
                                 [(0, r(x), 1, g(x)) for x in range(r.dom.n)])
    return ArrowCatMorphism(r, r_dot, g, g_dot, TwoCell(r_dot.after(g), g_dot.after(r)))


def pos_witness_square(s: MonotoneMap, f: MonotoneMap, bound: int, use_shortcut: bool = True,
                       max_search_size: int = 4) -> ArrowCatMorphism:
    """A Σ-square (top s, left f, right f', bottom s') with codomain of size at most ``bound``.

    An identity s gives the square (1, f, f, 1) itself. Otherwise the pushout is
    tried first and posets are then searched in canonical order.
    """
    if s.dom != f.dom:
        raise PreconditionError(f"span legs have different domains: {s!r}, {f!r}")
    if not s.is_embedding():
        raise PreconditionError(f"{s!r} is not an embedding")
    if s == MonotoneMap.identity(s.dom) and f.cod.n <= bound:
        return ArrowCatMorphism(s, MonotoneMap.identity(f.cod), f, f, TwoCell(f, f))
    if use_shortcut:
        candidate = pushout_square(s, f)
        if candidate.target.cod.n <= bound:
            return candidate
    for w in posets_up_to(min(bound, max_search_size)):
        for s_prime in enumerate_monotone_maps(f.cod, w):
            if not s_prime.is_embedding():
                continue
            for f_prime in enumerate_monotone_maps(s.cod, w):
                sq = ArrowCatMorphism(s, s_prime, f, f_prime,
                                      TwoCell(s_prime.after(f), f_prime.after(s)))
                if commutes(sq) and sigma_condition_elementwise(sq):
                    logger.debug(f"square witness found by search on |W|={w.n}")
                    return sq
    raise BoundExhausted("no Σ-square completes the span", bound, (s, f))


def _identity_sided_ok(s: MonotoneMap, d: MonotoneMap) -> bool:
    sq = ArrowCatMorphism(s, d.after(s), MonotoneMap.identity(s.dom), d, TwoCell(d.after(s), d.after(s)))
    return sq.target.is_embedding() and sigma_condition_elementwise(sq)


def pos_equi_insertion(sq: ArrowCatMorphism, g: MonotoneMap, alpha: TwoCell, bound: int,
                       use_shortcut: bool = True, max_search_size: int = 4) -> Tuple[MonotoneMap, TwoCell]:
    """d: D→E with (top s, left 1, right d, bottom ds) in Σ and d f' ≤ d g.

    ``sq`` is the Σ-square (top r, left f, right f', bottom s) and alpha witnesses f' r ≤ g r.
    """
    r, s, f_prime = sq.source, sq.target, sq.v
    if alpha.source != f_prime.after(r) or alpha.target != g.after(r):
        raise PreconditionError(f"2-cell {alpha!r} does not go from f'r to gr")
    if not f_prime.after(r).pointwise_le(g.after(r)):
        raise PreconditionError("f'r ≤ gr fails pointwise")
    d_poset = s.cod
    if use_shortcut:
        rel = np.array(d_poset.leq, dtype=bool)
        for b in range(f_prime.dom.n):
            rel[f_prime(b), g(b)] = True
        quotient, cls_of = quotient_preorder(d_poset.elements, reflexive_transitive_closure(rel))
        d = MonotoneMap(d_poset, quotient, cls_of, check=False)
        if quotient.n <= bound and _identity_sided_ok(s, d) and d.after(f_prime).pointwise_le(d.after(g)):
            return d, TwoCell(d.after(f_prime), d.after(g))
    for e in posets_up_to(min(bound, max_search_size)):
        for d in enumerate_monotone_maps(d_poset, e):
            if d.after(f_prime).pointwise_le(d.after(g)) and _identity_sided_ok(s, d):
                return d, TwoCell(d.after(f_prime), d.after(g))
    raise BoundExhausted("no Equi-insertion witness", bound, (sq, g))


class PosModel(LocallyPosetalModel):
    """Finite posets up to ``universe_size`` elements with embedding Σ-squares."""

    def __init__(self, universe_size: int = 2, max_search_size: int = 4, use_shortcuts: bool = True,
                 name: str = "pos"):
        self.universe_size = universe_size
        self.max_search_size = max_search_size
        self.use_shortcuts = use_shortcuts
        self.name = name
        self._homs: Dict[Tuple[FinitePoset, FinitePoset], List[MonotoneMap]] = {}

    def objects(self) -> List[FinitePoset]:
        return posets_up_to(self.universe_size)

    def size(self, obj: FinitePoset) -> int:
        return obj.n

    def search_objects(self, bound: int) -> List[FinitePoset]:
        return posets_up_to(min(bound, self.max_search_size))

    def completeness_bound(self, *objs: FinitePoset) -> Optional[int]:
        total = sum(obj.n for obj in objs)
        return total if total <= self.max_search_size else None

    def one_cells(self, a: FinitePoset, b: FinitePoset) -> List[MonotoneMap]:
        key = (a, b)
        if key not in self._homs:
            self._homs[key] = enumerate_monotone_maps(a, b)
        return self._homs[key]

    def dom(self, f: MonotoneMap) -> FinitePoset:
        return f.dom

    def cod(self, f: MonotoneMap) -> FinitePoset:
        return f.cod

    def id1(self, a: FinitePoset) -> MonotoneMap:
        return MonotoneMap.identity(a)

    def _compose(self, g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
        return g.after(f)

    def leq(self, f: MonotoneMap, g: MonotoneMap) -> bool:
        return f.dom == g.dom and f.cod == g.cod and f.pointwise_le(g)

    def in_sigma(self, f: MonotoneMap) -> bool:
        return f.is_embedding()

    def square_in_sigma(self, sq: ArrowCatMorphism) -> bool:
        return pos_square_in_sigma(sq)

    def canonical_square(self, r: MonotoneMap, g: MonotoneMap) -> ArrowCatMorphism:
        if r == MonotoneMap.identity(r.dom):
            one = MonotoneMap.identity(g.cod)
            return ArrowCatMorphism(r, one, g, g, TwoCell(g, g))
        if g == MonotoneMap.identity(g.dom):
            one = MonotoneMap.identity(r.cod)
            return ArrowCatMorphism(r, r, g, one, TwoCell(r, r))
        return pushout_square(r, g)

    def square_witness(self, r: MonotoneMap, g: MonotoneMap, bound: int) -> ArrowCatMorphism:
        return pos_witness_square(r, g, bound, self.use_shortcuts, self.max_search_size)

    def equi_insertion_witness(self, sq: ArrowCatMorphism, g: MonotoneMap, alpha: TwoCell,
                               bound: int) -> Tuple[MonotoneMap, TwoCell]:
        return pos_equi_insertion(sq, g, alpha, bound, self.use_shortcuts, self.max_search_size)

    def equification_witness(self, sq: ArrowCatMorphism, alpha: TwoCell, beta: TwoCell,
                             bound: int) -> MonotoneMap:
        # parallel 2-cells coincide in an order
        return MonotoneMap.identity(sq.v.cod)

    def joint_cocone(self, xs: List[MonotoneMap], ys: List[MonotoneMap], x3: MonotoneMap,
                     y3: MonotoneMap) -> Optional[Tuple[MonotoneMap, MonotoneMap]]:
        big_x, big_y = x3.cod, y3.cod
        glue = [(0, x(p), 1, y(p)) for x, y in zip(xs, ys) for p in range(x.dom.n)]
        glue += [(0, x3(b), 1, y3(b)) for b in range(x3.dom.n)]
        _, (d_x, d_y) = _colimit([big_x, big_y], ["x", "y"], glue)
        if _identity_sided_ok(x3, d_x) and _identity_sided_ok(y3, d_y):
            return d_x, d_y
        return None

    def coequalizing_extension(self, s: MonotoneMap,
                               pairs: List[Tuple[MonotoneMap, MonotoneMap]]) -> Optional[MonotoneMap]:
        target = s.cod
        glue = [(0, a(p), 0, b(p)) for a, b in pairs for p in range(a.dom.n)]
        _, (d,) = _colimit([target], ["q"], glue)
        return d if _identity_sided_ok(s, d) else None

    def sort_key(self, f: MonotoneMap):
        return (f.dom.n, f.cod.n, f.dom.elements, f.cod.elements, f.cod.leq.tobytes(), f.assignment)

    def lower_adjoint_pairs(self, f: MonotoneMap) -> List[Tuple[MonotoneMap, MonotoneMap]]:
        """All g: cod → dom with 1 ≤ g f and f g ≤ 1, i.e. right adjoints of f."""
        return [(f, g) for g in self.one_cells(f.cod, f.dom)
                if self.leq(self.id1(f.dom), g.after(f)) and self.leq(f.after(g), self.id1(f.cod))]


def all_pos_squares(model: PosModel, bound: int, sigma_only: bool = True) -> List[ArrowCatMorphism]:
    """Every commuting square with embedding horizontals over posets of size ≤ bound."""
    objs = model.search_objects(bound)
    squares = []
    for b, i in product(objs, objs):
        for r in model.one_cells(b, i):
            if not r.is_embedding():
                continue
            for b2, i2 in product(objs, objs):
                for s in model.one_cells(b2, i2):
                    if not s.is_embedding():
                        continue
                    for u, v in product(model.one_cells(b, b2), model.one_cells(i, i2)):
                        sq = ArrowCatMorphism(r, s, u, v, TwoCell(s.after(u), v.after(r)))
                        if commutes(sq) and (not sigma_only or sigma_condition_elementwise(sq)):
                            squares.append(sq)
    return squares
