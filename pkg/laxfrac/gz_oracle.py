"""
Classical category of fractions for finite categories with trivial 2-cells.

Used as an oracle: when Σ admits a calculus of left fractions, the
lax-fractions hom-categories collapse onto the classical hom-sets.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Tuple

import networkx as nx

from laxfrac.errors import BoundaryError, NotLocalizable
from laxfrac.lax_fractions import LaxFractions, SigmaCospan
from laxfrac.models.category_model import TrivialModel

logger = logging.getLogger(__name__)

Fraction = Tuple[str, str]


def check_classical_axioms(model: TrivialModel) -> None:
    """Raise NotLocalizable naming the first violated axiom and its witness."""
    names = model.morphisms()
    for obj in model.objects():
        if not model.in_sigma(model.id1(obj)):
            raise NotLocalizable(f"identity of {obj} is not in Σ", "identities", model.id1(obj))
    sigma = [s for s in names if model.in_sigma(s)]
    for s, t in product(sigma, sigma):
        if model.cod(s) == model.dom(t) and not model.in_sigma(model.compose(t, s)):
            raise NotLocalizable(f"{t}∘{s} is not in Σ", "composition", (t, s))
    for s in sigma:
        for f in names:
            if model.dom(f) != model.dom(s):
                continue
            if not any(model.compose(s2, f) == model.compose(f2, s)
                       for s2 in sigma if model.dom(s2) == model.cod(f)
                       for f2 in model.one_cells(model.cod(s), model.cod(s2))):
                raise NotLocalizable(f"no Ore square completes ({s}, {f})", "ore", (s, f))
    for s in sigma:
        for f, g in product(names, names):
            if f == g or model.dom(f) != model.cod(s) or model.dom(g) != model.cod(s) or model.cod(f) != model.cod(g):
                continue
            if model.compose(f, s) != model.compose(g, s):
                continue
            if not any(model.compose(t, f) == model.compose(t, g) for t in sigma if model.dom(t) == model.cod(f)):
                raise NotLocalizable(f"{f} and {g} agree after {s} but no t in Σ equalises them",
                                     "cancellation", (s, f, g))


@dataclass
class ClassicalLocalization:
    """Fractions (f, s): A -f-> I <-s- B modulo the zig-zag relation, with composition."""
    model: TrivialModel
    homs: Dict[Tuple[str, str], List[Fraction]] = field(default_factory=dict)
    class_of: Dict[Fraction, Fraction] = field(default_factory=dict)

    def hom(self, a: str, b: str) -> List[Fraction]:
        return self.homs.get((a, b), [])

    def representative(self, fraction: Fraction) -> Fraction:
        return self.class_of[fraction]

    def compose(self, second: Fraction, first: Fraction) -> Fraction:
        """(g, t)∘(f, s) = (g'f, s't) for an Ore square s'∘g = g'∘s."""
        m = self.model
        f, s = first
        g, t = second
        if m.dom(s) != m.dom(g):
            raise BoundaryError(f"fractions {first} and {second} do not chain")
        for s2 in m.morphisms():
            if not m.in_sigma(s2) or m.dom(s2) != m.cod(g):
                continue
            for g2 in m.one_cells(m.cod(s), m.cod(s2)):
                if m.compose(s2, g) == m.compose(g2, s):
                    return self.representative((m.compose(g2, f), m.compose(s2, t)))
        raise NotLocalizable(f"no Ore square completes ({s}, {g})", "ore", (s, g))

    def identity(self, a: str) -> Fraction:
        one = self.model.id1(a)
        return self.representative((one, one))


def localize_classical(model: TrivialModel) -> ClassicalLocalization:
    check_classical_axioms(model)
    loc = ClassicalLocalization(model)
    names = model.morphisms()
    fractions = [(f, s) for f in names for s in names if model.in_sigma(s) and model.cod(f) == model.cod(s)]
    zigzags = nx.Graph()
    zigzags.add_nodes_from(fractions)
    for (f, s), (f2, s2) in product(fractions, fractions):
        if model.dom(f) != model.dom(f2) or model.dom(s) != model.dom(s2):
            continue
        for u, u2 in product(names, names):
            if model.dom(u) != model.cod(f) or model.dom(u2) != model.cod(f2) or model.cod(u) != model.cod(u2):
                continue
            joined = model.compose(u, s)
            if joined == model.compose(u2, s2) and model.compose(u, f) == model.compose(u2, f2) \
                    and model.in_sigma(joined):
                zigzags.add_edge((f, s), (f2, s2))
                break
    for component in nx.connected_components(zigzags):
        rep = min(component)
        loc.class_of.update((fraction, rep) for fraction in component)
    for fraction in fractions:
        rep = loc.class_of[fraction]
        key = (model.dom(fraction[0]), model.dom(fraction[1]))
        if rep not in loc.homs.setdefault(key, []):
            loc.homs[key].append(rep)
    for s in names:
        if model.in_sigma(s):
            a, b = model.dom(s), model.cod(s)
            forward, backward = loc.representative((s, model.id1(b))), loc.representative((model.id1(b), s))
            if loc.compose(backward, forward) != loc.identity(a) or loc.compose(forward, backward) != loc.identity(b):
                raise NotLocalizable(f"{s} is not inverted by the fractions", "inversion", s)
    logger.info(f"classical localisation of {model.name}: {len(fractions)} fractions, "
                f"{len(set(loc.class_of.values()))} classes")
    return loc


@dataclass
class HomComparison:
    source: str
    target: str
    components: int
    fraction_classes: int
    well_defined: bool
    injective: bool
    surjective: bool
    endo_classes_trivial: bool
    mismatches: List[str] = field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return self.well_defined and self.injective and self.surjective and self.endo_classes_trivial


def compare_hom(engine: LaxFractions, loc: ClassicalLocalization, a: str, b: str,
                apex_bound: Optional[int] = None, ext_bound: Optional[int] = None) -> HomComparison:
    """Map the connected components of hom(a, b) to classical fraction classes."""
    hom = engine.hom_category(a, b, apex_bound, ext_bound)
    n = len(hom.objects)
    linked = nx.Graph()
    linked.add_nodes_from(range(n))
    linked.add_edges_from((i, j) for (i, j), cells in hom.classes.items() if cells)
    components: Dict[int, List[SigmaCospan]] = {
        min(members): [hom.objects[i] for i in sorted(members)]
        for members in sorted(nx.connected_components(linked), key=min)
    }

    mismatches = []
    image: Dict[int, Fraction] = {}
    well_defined = True
    for root, members in components.items():
        targets = {loc.representative((c.f, c.r)) for c in members}
        if len(targets) != 1:
            well_defined = False
            mismatches.append(f"component of {members[0]!r} meets {len(targets)} fraction classes")
        image[root] = sorted(targets)[0]
    injective = len(set(image.values())) == len(image)
    if not injective:
        mismatches.append("distinct components share a fraction class")
    surjective = set(image.values()) == set(loc.hom(a, b))
    if not surjective:
        mismatches.append("some fraction classes are not reached")
    endo_trivial = all(len(hom.hom(i, i)) == 1 for i in range(n))
    if not endo_trivial:
        mismatches.append("an endo hom-set has more than the identity class")
    return HomComparison(a, b, len(components), len(loc.hom(a, b)), well_defined, injective, surjective,
                         endo_trivial, mismatches)
