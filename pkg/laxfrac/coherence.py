"""
Verification of the bicategory structure of 𝒳[Σ*] and of its universal property.

Every check returns a CheckRecord. Checks over large families draw their
instances from the enumerated hom-categories with ``numpy.random.default_rng``
seeded per check, so a fixed seed reproduces the report exactly.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, TypeVar

import numpy as np

from laxfrac.config import anchor_for
from laxfrac.errors import (BoundExhausted, Decision, LaxFractionsError, NotLocalizable, NotReplaceable,
                            PreconditionError)
from laxfrac.gz_oracle import compare_hom, localize_classical
from laxfrac.lax_fractions import LaxFractions, SigmaCospan, TwoCellClass, TwoMorphism
from laxfrac.models.category_model import TrivialModel
from laxfrac.omega_paths import (SigmaPath, associator_path, canonical_path, canonicalize, enumerate_steps,
                                 length_two_pairs, make_step, omega_of_path, paths_equivalent, reverse_path,
                                 scheme_cospan, step_omega)
from laxfrac.reports import CheckRecord, verdict_of
from laxfrac.schemes import (PADDED_TAGS, TEMPLATES, BorderRun, SigmaScheme, Tile, canonical_scheme,
                             classify_configuration, lift_below, lift_left, make_scheme, paste_tiles,
                             region_tiles, validate_scheme)
from laxfrac.sigma_calculus import all_sigma_squares, check_axioms, sigma_objects
from laxfrac.two_cat_core import Obj, check_two_category_laws
from laxfrac.universal import (check_localized_triangles, find_right_adjoint, is_beck_chevalley,
                               lari_in_localization, verify_bc_image)

logger = logging.getLogger(__name__)

T = TypeVar("T")


def combine(*decisions: Decision) -> Decision:
    """NO if any NO, else UNDETERMINED if any undetermined, else YES."""
    if Decision.NO in decisions:
        return Decision.NO
    if Decision.UNDETERMINED in decisions:
        return Decision.UNDETERMINED
    return Decision.YES


@dataclass
class Tally:
    """Running verdict of one check."""
    name: str
    instances: int = 0
    failures: List[str] = field(default_factory=list)
    undetermined: int = 0
    exhausted: int = 0

    def run(self, label: str, check: Callable[[], Any]) -> None:
        """Count one instance; ``check`` returns a Decision or a bool."""
        self.instances += 1
        decision = self.attempt(label, check)
        if isinstance(decision, bool):
            decision = Decision.of(decision)
        if decision is Decision.NO:
            self.failures.append(label)
        elif decision is Decision.UNDETERMINED:
            self.undetermined += 1

    def attempt(self, label: str, compute: Callable[[], T]) -> Optional[T]:
        """Run ``compute``, booking exhaustion and engine errors against the check."""
        try:
            return compute()
        except BoundExhausted as exc:
            self.exhausted += 1
            logger.warning(f"{self.name}: {label}: {exc}")
        except LaxFractionsError as exc:
            self.failures.append(f"{label}: {exc}")
        return None

    def record(self, **details: Any) -> CheckRecord:
        details.update(undetermined=self.undetermined, exhausted=self.exhausted)
        verdict = verdict_of(self.failures, self.undetermined, self.exhausted)
        logger.info(f"{self.name}: {verdict} over {self.instances} instances")
        return CheckRecord(name=self.name, anchor=anchor_for(self.name), verdict=verdict,
                           instances=self.instances, failures=list(self.failures), details=details)


# model-level checks


def axiom_records(model, bound: int, witness_bound: int) -> List[CheckRecord]:
    records = []
    laws = Tally("two_category_laws")
    failures = laws.attempt("laws", lambda: check_two_category_laws(model, bound))
    laws.instances = 1
    laws.failures.extend(failures or [])
    records.append(laws.record(bound=bound))
    for result in check_axioms(model, bound, witness_bound):
        name = "axiom_" + result.name.lower().replace("-", "_").replace(" ", "_")
        tally = Tally(name, result.instances, list(result.failures), 0, result.exhausted)
        records.append(tally.record(bound=bound, witness_bound=witness_bound))
    return records


class CoherenceChecker:
    """Draws composable cospans and 2-cells from an engine and checks the bicategory laws on them.

    ``samples`` maps a check group to its number of draws; groups it does
    not name draw ``sample_size`` instances.
    """

    def __init__(self, engine: LaxFractions, seed: int = 0, sample_size: int = 8,
                 samples: Optional[Dict[str, int]] = None):
        self.engine = engine
        self.model = engine.model
        self.seed = seed
        self.sample_size = sample_size
        self.samples = dict(samples or {})
        self._cospans: Dict[Tuple[Obj, Obj], List[SigmaCospan]] = {}
        self._two_morphisms: Dict[Tuple[SigmaCospan, SigmaCospan], List[TwoMorphism]] = {}
        self._cells: Dict[Tuple[SigmaCospan, SigmaCospan], List[TwoCellClass]] = {}
        self._successors: Dict[SigmaCospan, List[SigmaCospan]] = {}

    def count(self, group: str) -> int:
        return self.samples.get(group, self.sample_size)

    # pools

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)

    def cospans(self, a: Obj, b: Obj) -> List[SigmaCospan]:
        if (a, b) not in self._cospans:
            self._cospans[(a, b)] = self.engine.cospans_between(a, b)
        return self._cospans[(a, b)]

    def targets(self, a: Obj) -> List[Obj]:
        """Objects reached from ``a`` by at least one Σ-cospan."""
        return [b for b in self.model.objects() if self.cospans(a, b)]

    def two_morphisms(self, c1: SigmaCospan, c2: SigmaCospan) -> List[TwoMorphism]:
        if (c1, c2) not in self._two_morphisms:
            self._two_morphisms[(c1, c2)] = self.engine.two_morphisms_between(c1, c2)
        return self._two_morphisms[(c1, c2)]

    def cells(self, c1: SigmaCospan, c2: SigmaCospan) -> List[TwoCellClass]:
        if (c1, c2) not in self._cells:
            self._cells[(c1, c2)] = [self.engine.cls(tm) for tm in self.two_morphisms(c1, c2)]
        return self._cells[(c1, c2)]

    def successors(self, c1: SigmaCospan) -> List[SigmaCospan]:
        """Cospans parallel to ``c1`` that receive a 2-cell from it."""
        if c1 not in self._successors:
            self._successors[c1] = [c2 for c2 in self.cospans(c1.source, c1.target) if self.two_morphisms(c1, c2)]
        return self._successors[c1]

    @staticmethod
    def pick(rng: np.random.Generator, items: Sequence[T]) -> Optional[T]:
        return items[int(rng.integers(len(items)))] if items else None

    def draw(self, rng: np.random.Generator, n: int,
             draw_one: Callable[[np.random.Generator], Optional[T]]) -> List[T]:
        """Up to ``n`` successful draws, giving up after four times as many attempts."""
        found: List[T] = []
        for _ in range(4 * n):
            if len(found) == n:
                break
            item = draw_one(rng)
            if item is not None:
                found.append(item)
        return found

    @staticmethod
    def subsample(rng: np.random.Generator, items: Sequence[T], n: int) -> List[T]:
        if len(items) <= n:
            return list(items)
        chosen = sorted(rng.choice(len(items), size=n, replace=False))
        return [items[int(i)] for i in chosen]

    def ends(self, rng: np.random.Generator) -> Optional[Tuple[Obj, Obj]]:
        a = self.pick(rng, self.model.objects())
        b = self.pick(rng, self.targets(a)) if a is not None else None
        return None if b is None else (a, b)

    def cospan_chain(self, rng: np.random.Generator, n: int) -> Optional[List[SigmaCospan]]:
        """n composable cospans through randomly chosen objects."""
        a = self.pick(rng, self.model.objects())
        chain = []
        for _ in range(n):
            b = self.pick(rng, self.targets(a)) if a is not None else None
            if b is None:
                return None
            chain.append(self.pick(rng, self.cospans(a, b)))
            a = b
        return chain

    def cell_chain(self, rng: np.random.Generator, n: int,
                   ends: Optional[Tuple[Obj, Obj]] = None) -> Optional[List[TwoCellClass]]:
        """n vertically composable 2-cells in one hom-category."""
        ends = ends or self.ends(rng)
        if ends is None:
            return None
        current = self.pick(rng, self.cospans(*ends))
        chain = []
        for _ in range(n):
            following = self.pick(rng, self.successors(current)) if current is not None else None
            if following is None:
                return None
            chain.append(self.pick(rng, self.cells(current, following)))
            current = following
        return chain

    def extension_of(self, tm: TwoMorphism) -> Optional[TwoMorphism]:
        """The first Σ-extension of ``tm`` that differs from it."""
        m = self.model
        for obj in m.search_objects(self.engine.ext_bound):
            for d in m.one_cells(m.cod(tm.x3), obj):
                try:
                    extended = self.engine.extend_by(tm, d)
                except PreconditionError:
                    continue
                if extended != tm:
                    return extended
        return None

    def same(self, c1: TwoCellClass, c2: TwoCellClass) -> Decision:
        return self.engine.same_class(c1, c2).decision

    def details(self, group: str, **extra: Any) -> Dict[str, Any]:
        return dict(seed=self.seed, sample_size=self.count(group), **extra)

    # ≈

    def check_equivalence_relation(self) -> CheckRecord:
        """Reflexivity and symmetry on up to three drawn 2-morphisms, transitivity on one triple, per draw."""
        rng = self.rng()
        tally = Tally("equivalence_relation")
        engine = self.engine
        triples = 0
        for tms in self.draw(rng, self.count("equivalence_relation"), self._parallel_two_morphisms):
            shown = self.subsample(rng, tms, 3)
            for tm in shown:
                tally.run(f"reflexivity at {tm.src!r} ⇒ {tm.tgt!r}",
                          lambda tm=tm: engine.are_equivalent(tm, tm).decision)
            for tm1, tm2 in combinations(shown, 2):
                tally.run(f"symmetry at {tm1.src!r} ⇒ {tm1.tgt!r}",
                          lambda tm1=tm1, tm2=tm2: engine.are_equivalent(tm1, tm2).decision
                          is engine.are_equivalent(tm2, tm1).decision)
            picks = [tms[int(i)] for i in rng.integers(len(tms), size=3)]
            triples += 1
            tally.run(f"transitivity at {tms[0].src!r} ⇒ {tms[0].tgt!r}",
                      lambda picks=picks: self._transitive(*picks))
        return tally.record(**self.details("equivalence_relation", transitivity_triples=triples))

    def _parallel_two_morphisms(self, rng: np.random.Generator) -> Optional[List[TwoMorphism]]:
        ends = self.ends(rng)
        c1 = self.pick(rng, self.cospans(*ends)) if ends is not None else None
        c2 = self.pick(rng, self.successors(c1)) if c1 is not None else None
        return self.two_morphisms(c1, c2) if c2 is not None else None

    def _transitive(self, tm1: TwoMorphism, tm2: TwoMorphism, tm3: TwoMorphism) -> Decision:
        first = self.engine.are_equivalent(tm1, tm2).decision
        second = self.engine.are_equivalent(tm2, tm3).decision
        if first is Decision.YES and second is Decision.YES:
            return self.engine.are_equivalent(tm1, tm3).decision
        return combine(*(d for d in (first, second) if d is Decision.UNDETERMINED))

    def check_extension_equivalence(self) -> CheckRecord:
        rng = self.rng()
        tally = Tally("extension_equivalence")
        for (cell,) in self.draw(rng, self.count("extension_equivalence"), lambda r: self.cell_chain(r, 1)):
            tm = cell.representative
            extended = tally.attempt(f"extending {tm.src!r} ⇒ {tm.tgt!r}", lambda tm=tm: self.extension_of(tm))
            if extended is not None:
                tally.run(f"extension of {tm.src!r} ⇒ {tm.tgt!r}",
                          lambda tm=tm, extended=extended: self.engine.are_equivalent(tm, extended).decision)
        return tally.record(**self.details("extension_equivalence"))

    # vertical composition

    def check_vertical(self) -> List[CheckRecord]:
        rng = self.rng()
        engine = self.engine
        well_defined = Tally("vertical_well_defined")
        associativity = Tally("vertical_associativity")
        units = Tally("vertical_units")
        for alpha, beta, gamma in self.draw(rng, self.count("vertical"), lambda r: self.cell_chain(r, 3)):
            label = f"{alpha.src!r} ⇒ {alpha.tgt!r} ⇒ {beta.tgt!r}"
            extended = well_defined.attempt(label, lambda: self.extension_of(alpha.representative))
            if extended is not None:
                well_defined.run(f"representative of the first factor, {label}",
                                 lambda extended=extended: self.same(engine.vcompose(beta, alpha),
                                                                     engine.vcompose(beta, engine.cls(extended))))
            extended = well_defined.attempt(label, lambda: self.extension_of(beta.representative))
            if extended is not None:
                well_defined.run(f"representative of the second factor, {label}",
                                 lambda extended=extended: self.same(engine.vcompose(beta, alpha),
                                                                     engine.vcompose(engine.cls(extended), alpha)))
            associativity.run(f"γ·(β·α) at {label}",
                              lambda: self.same(engine.vcompose(gamma, engine.vcompose(beta, alpha)),
                                                engine.vcompose(engine.vcompose(gamma, beta), alpha)))
            units.run(f"1·α at {label}",
                      lambda: self.same(engine.vcompose(engine.identity_two_cell(alpha.tgt), alpha), alpha))
            units.run(f"α·1 at {label}",
                      lambda: self.same(engine.vcompose(alpha, engine.identity_two_cell(alpha.src)), alpha))
        return [tally.record(**self.details("vertical")) for tally in (well_defined, associativity, units)]

    # horizontal composition

    def _horizontal_pair(self, rng: np.random.Generator, n: int):
        ends = self.ends(rng)
        c = self.pick(rng, self.targets(ends[1])) if ends is not None else None
        if c is None:
            return None
        left = self.cell_chain(rng, n, ends)
        right = self.cell_chain(rng, n, (ends[1], c))
        if left is None or right is None:
            return None
        return left, right

    def check_horizontal(self) -> List[CheckRecord]:
        rng = self.rng()
        engine = self.engine
        identities = Tally("horizontal_identities")
        whiskering = Tally("whiskering_units")
        interchange = Tally("interchange")
        for (alpha1, alpha2), (beta1, beta2) in self.draw(rng, self.count("horizontal"),
                                                                    lambda r: self._horizontal_pair(r, 2)):
            f_bar, g_bar = alpha1.src, beta1.src
            identities.run(f"1_{g_bar!r}∘1_{f_bar!r}",
                           lambda: self.same(engine.hcompose(engine.identity_two_cell(g_bar),
                                                             engine.identity_two_cell(f_bar)),
                                             engine.identity_two_cell(engine.compose_cospans(g_bar, f_bar))))
            whiskering.run(f"1∘α at {alpha1.src!r}",
                           lambda: self.same(engine.whisker_left(engine.identity_cospan(f_bar.target), alpha1),
                                             alpha1))
            whiskering.run(f"α∘1 at {alpha1.src!r}",
                           lambda: self.same(engine.whisker_right(alpha1, engine.identity_cospan(f_bar.source)),
                                             alpha1))
            interchange.run(f"(β2·β1)∘(α2·α1) at {f_bar!r}, {g_bar!r}",
                            lambda: self.same(
                                engine.hcompose(engine.vcompose(beta2, beta1), engine.vcompose(alpha2, alpha1)),
                                engine.vcompose(engine.hcompose(beta2, alpha2), engine.hcompose(beta1, alpha1))))
        return [tally.record(**self.details("horizontal")) for tally in (identities, whiskering, interchange)]

    # associators and unitors

    def check_bicategory(self) -> List[CheckRecord]:
        rng = self.rng()
        engine = self.engine
        unitors = Tally("unitors")
        invertible = Tally("associator_invertible")
        naturality = Tally("associator_naturality")
        pentagon = Tally("pentagon")
        triangle = Tally("triangle")
        chains = self.draw(rng, self.count("bicategory"), lambda r: self.cospan_chain(r, 4))
        for f_bar, g_bar, h_bar, k_bar in chains:
            label = f"{f_bar!r}, {g_bar!r}, {h_bar!r}"
            unitors.run(f"unitors of {f_bar!r}", lambda: engine.unitors(f_bar) is not None)
            invertible.run(f"a·a⁻¹ and a⁻¹·a at {label}",
                           lambda: self._associator_inverse_laws(f_bar, g_bar, h_bar))
            triangle.run(f"a({f_bar!r}, 1, {g_bar!r})",
                         lambda: self.same(engine.associator(f_bar, engine.identity_cospan(f_bar.target), g_bar),
                                           engine.identity_two_cell(engine.compose_cospans(g_bar, f_bar))))
            pentagon.run(f"pentagon at {label}, {k_bar!r}", lambda: self._pentagon(f_bar, g_bar, h_bar, k_bar))
            other = self.pick(rng, self.successors(f_bar))
            alpha = self.pick(rng, self.cells(f_bar, other)) if other is not None else None
            if alpha is not None:
                naturality.run(f"naturality in the first variable at {label}",
                               lambda alpha=alpha: self._naturality(alpha, g_bar, h_bar))
        return [tally.record(**self.details("bicategory"))
                for tally in (unitors, invertible, naturality, pentagon, triangle)]

    def _associator_inverse_laws(self, f_bar: SigmaCospan, g_bar: SigmaCospan, h_bar: SigmaCospan) -> Decision:
        engine = self.engine
        a = engine.associator(f_bar, g_bar, h_bar)
        a_inv = engine.associator_inverse(f_bar, g_bar, h_bar)
        return combine(self.same(engine.vcompose(a_inv, a), engine.identity_two_cell(a.src)),
                       self.same(engine.vcompose(a, a_inv), engine.identity_two_cell(a.tgt)))

    def _pentagon(self, f_bar: SigmaCospan, g_bar: SigmaCospan, h_bar: SigmaCospan,
                  k_bar: SigmaCospan) -> Decision:
        """((k∘h)∘g)∘f ⇒ k∘(h∘(g∘f)) along both sides of the pentagon."""
        engine = self.engine
        kh = engine.compose_cospans(k_bar, h_bar)
        gf = engine.compose_cospans(g_bar, f_bar)
        hg = engine.compose_cospans(h_bar, g_bar)
        two_sided = engine.vcompose(engine.associator(gf, h_bar, k_bar), engine.associator(f_bar, g_bar, kh))
        three_sided = engine.vcompose_all(engine.whisker_left(k_bar, engine.associator(f_bar, g_bar, h_bar)),
                                          engine.associator(f_bar, hg, k_bar),
                                          engine.whisker_right(engine.associator(g_bar, h_bar, k_bar), f_bar))
        return self.same(two_sided, three_sided)

    def _naturality(self, alpha: TwoCellClass, g_bar: SigmaCospan, h_bar: SigmaCospan) -> Decision:
        engine = self.engine
        hg = engine.compose_cospans(h_bar, g_bar)
        lhs = engine.vcompose(engine.associator(alpha.tgt, g_bar, h_bar), engine.whisker_left(hg, alpha))
        rhs = engine.vcompose(engine.whisker_left(h_bar, engine.whisker_left(g_bar, alpha)),
                              engine.associator(alpha.src, g_bar, h_bar))
        return self.same(lhs, rhs)

    # Ω

    def level_two_schemes(self, rng: np.random.Generator, tally: Tally, group: str) -> List[SigmaScheme]:
        """Schemes met on associator paths of sampled composable triples."""
        schemes: List[SigmaScheme] = []
        for f_bar, g_bar, h_bar in self.draw(rng, self.count(group), lambda r: self.cospan_chain(r, 3)):
            path = tally.attempt(f"associator path at {f_bar!r}, {g_bar!r}, {h_bar!r}",
                                 lambda: associator_path(self.engine, f_bar, g_bar, h_bar))
            if path is None:
                continue
            for scheme in [path.start] + [step.after for step in path.steps]:
                if scheme not in schemes:
                    schemes.append(scheme)
        return schemes

    def check_omega(self) -> List[CheckRecord]:
        rng = self.rng()
        engine = self.engine
        inverse = Tally("omega_inverse")
        identity = Tally("omega_identity")
        composition = Tally("omega_composition")
        length_two = Tally("length_two_paths")
        for scheme in self.level_two_schemes(rng, inverse, "omega"):
            steps = inverse.attempt("enumerating steps", lambda: enumerate_steps(engine, scheme)) or []
            start = engine.identity_two_cell(scheme_cospan(engine, scheme))
            for step in steps:
                inverse.run(f"reversed step at {step.corner}",
                            lambda step=step: self.same(engine.vcompose(step_omega(engine, step.reversed()),
                                                                        step_omega(engine, step)), start))
                for second in composition.attempt("enumerating steps",
                                                  lambda step=step: enumerate_steps(engine, step.after)) or []:
                    if second.corner == step.corner:
                        composition.run(f"two steps at {step.corner}",
                                        lambda step=step, second=second: self._omega_composes(step, second))
            for tile in scheme.tiles:
                try:
                    tiles = region_tiles(scheme, tile.corner)
                except NotReplaceable:
                    continue
                identity.run(f"self-step at {tile.corner}",
                             lambda tile=tile, tiles=tiles: self._self_step(scheme, tile.corner, tiles, start))
            pairs = length_two.attempt("enumerating paths", lambda: length_two_pairs(engine, scheme)) or []
            for p1, p2 in self.subsample(rng, pairs, self.count("omega")):
                length_two.run(f"paths of lengths {len(p1)} and {len(p2)}",
                               lambda p1=p1, p2=p2: paths_equivalent(engine, p1, p2).decision)
        return [tally.record(**self.details("omega")) for tally in (inverse, identity, composition, length_two)]

    def _self_step(self, scheme: SigmaScheme, corner, tiles: List[Tile], identity: TwoCellClass) -> Decision:
        step = make_step(self.engine, scheme, corner, tiles)
        if step.after != scheme:
            return Decision.NO
        return self.same(step_omega(self.engine, step), identity)

    def _omega_composes(self, first, second) -> Decision:
        engine = self.engine
        direct = make_step(engine, first.before, first.corner, region_tiles(second.after, first.corner))
        path = SigmaPath(first.before, (first, second))
        return self.same(omega_of_path(engine, path), step_omega(engine, direct))

    # canonical paths

    def level_three_schemes(self, rng: np.random.Generator, tally: Tally, group: str) -> List[SigmaScheme]:
        """Canonical level-3 schemes, padded and plain, over sampled composable quadruples."""
        m = self.model
        schemes: List[SigmaScheme] = []
        for f_bar, g_bar, h_bar, k_bar in self.draw(rng, self.count(group), lambda r: self.cospan_chain(r, 4)):
            plain = (BorderRun((f_bar.r,), (g_bar.f,)), BorderRun((g_bar.r,), (h_bar.f,)),
                     BorderRun((h_bar.r,), (k_bar.f,)))
            padded = (plain[0], BorderRun((g_bar.r,), (m.id1(m.dom(h_bar.f)), h_bar.f)), plain[2])
            for runs in (plain, padded):
                scheme = tally.attempt(f"canonical scheme over {f_bar!r}, {g_bar!r}, {h_bar!r}, {k_bar!r}",
                                       lambda runs=runs: canonical_scheme(m, runs, f_bar.f, k_bar.r))
                if scheme is not None and scheme not in schemes:
                    schemes.append(scheme)
        return schemes

    def configurations(self, canonical: SigmaScheme) -> List[SigmaScheme]:
        """The canonical scheme and every common coarsening of two templates it refines."""
        m = self.model
        padded = len(canonical.runs[1].vertical) == 2
        tags = [tag for tag in TEMPLATES if (tag in PADDED_TAGS) == padded]
        found = [canonical]
        for t1, t2 in combinations(tags, 2):
            rects = sorted({_meet(a, b) for a, b in product(TEMPLATES[t1], TEMPLATES[t2]) if _meet(a, b)})
            tiles = []
            for rect in rects:
                inner = [tile for tile in canonical.tiles if tile.inside(*rect)]
                if not inner:
                    break
                tiles.append(Tile(*rect, paste_tiles(m, inner)))
            else:
                scheme = make_scheme(canonical.runs, tiles, canonical.f0, canonical.t0)
                if validate_scheme(m, scheme) and scheme not in found:
                    found.append(scheme)
        return found

    def check_canonical_paths(self) -> CheckRecord:
        rng = self.rng()
        engine = self.engine
        tally = Tally("canonical_paths")
        for canonical in self.level_three_schemes(rng, tally, "canonical_paths"):
            for scheme in self.configurations(canonical):
                tags = classify_configuration(self.model, scheme)
                if len(tags) < 2:
                    continue
                paths = {}
                for tag in tags:
                    path = tally.attempt(f"canonical path of type {tag}",
                                         lambda tag=tag: canonical_path(engine, scheme, tag))
                    if path is not None:
                        paths[tag] = path
                for (t1, p1), (t2, p2) in combinations(paths.items(), 2):
                    tally.run(f"canonical paths of types {t1} and {t2}",
                              lambda p1=p1, p2=p2: paths_equivalent(engine, p1, p2).decision)
        return tally.record(**self.details("canonical_paths"))

    # whiskering

    def check_whisker_compatibility(self) -> CheckRecord:
        rng = self.rng()
        engine = self.engine
        m = self.model
        tally = Tally("whisker_compatibility")
        for scheme in self.level_two_schemes(rng, tally, "whisker_compatibility"):
            path = tally.attempt("canonicalising", lambda: canonicalize(engine, scheme))
            if path is None or not path.steps:
                continue
            omega = tally.attempt("Ω of the canonical path", lambda: omega_of_path(engine, path))
            if omega is None:
                continue
            cospan = scheme_cospan(engine, scheme)
            f_bar = self.pick(rng, self.cospans(self.pick(rng, m.objects()), cospan.source))
            if f_bar is not None:
                tally.run(f"Ω∘{f_bar!r}", lambda f_bar=f_bar: self.same(
                    self._lifted_omega(path, lambda s: lift_left(m, s, f_bar.r, f_bar.f)),
                    engine.whisker_right(omega, f_bar)))
            k_bar = self.pick(rng, self.cospans(cospan.target, self.pick(rng, m.objects())))
            if k_bar is not None:
                tally.run(f"{k_bar!r}∘Ω", lambda k_bar=k_bar: self.same(
                    self._lifted_omega(path, lambda s: lift_below(m, s, k_bar.f, k_bar.r)),
                    engine.whisker_left(k_bar, omega)))
        return tally.record(**self.details("whisker_compatibility"))

    def _lifted_omega(self, path: SigmaPath, lift: Callable[[SigmaScheme], SigmaScheme]) -> TwoCellClass:
        """Ω from the lifted start to the lifted end through their common canonical scheme."""
        engine = self.engine
        there = canonicalize(engine, lift(path.start))
        back = reverse_path(engine, canonicalize(engine, lift(path.end)))
        return omega_of_path(engine, SigmaPath(there.start, there.steps + back.steps))

    def run_all(self) -> List[CheckRecord]:
        records = [self.check_equivalence_relation(), self.check_extension_equivalence()]
        records += self.check_vertical()
        records += self.check_horizontal()
        records += self.check_bicategory()
        records += self.check_omega()
        records.append(self.check_canonical_paths())
        records.append(self.check_whisker_compatibility())
        return records


def _meet(a: Tuple[int, int, int, int], b: Tuple[int, int, int, int]) -> Optional[Tuple[int, int, int, int]]:
    top, left, bottom, right = max(a[0], b[0]), max(a[1], b[1]), min(a[2], b[2]), min(a[3], b[3])
    return (top, left, bottom, right) if top < bottom and left < right else None


# universal property


def lari_record(engine: LaxFractions, bound: int) -> CheckRecord:
    tally = Tally("lari_triangles")
    for s in sigma_objects(engine.model, bound):
        tally.run(f"P({s!r}) ⊣ (1, {s!r})", lambda s=s: _lari_decision(engine, s))
    return tally.record(bound=bound)


def _lari_decision(engine: LaxFractions, s) -> Decision:
    report = check_localized_triangles(engine, lari_in_localization(engine, s))
    return combine(report.left_triangle, report.right_triangle, report.unit_invertible)


def model_bc_record(model, bound: int) -> CheckRecord:
    """Mates computed in the model agree with the restatement u∘r_* ≅ s_*∘v."""
    tally = Tally("model_beck_chevalley")
    skipped = 0
    for sq in all_sigma_squares(model, bound):
        try:
            top = find_right_adjoint(model, sq.top, lari=True)
            bottom = find_right_adjoint(model, sq.bottom, lari=True)
        except LaxFractionsError:
            skipped += 1
            continue
        restated = model.find_invertible(model.compose(sq.left, top.right),
                                         model.compose(bottom.right, sq.right)) is not None
        tally.run(f"{sq!r}", lambda sq=sq, restated=restated: is_beck_chevalley(model, sq) == restated)
    return tally.record(bound=bound, squares_without_lari_edges=skipped)


def bc_image_record(engine: LaxFractions, bound: int, seed: int = 0, sample_size: Optional[int] = None) -> CheckRecord:
    tally = Tally("bc_image")
    squares = all_sigma_squares(engine.model, bound)
    if sample_size is not None and len(squares) > sample_size:
        rng = np.random.default_rng(seed)
        squares = [squares[int(i)] for i in sorted(rng.choice(len(squares), size=sample_size, replace=False))]
    for sq in squares:
        tally.run(f"P{sq!r}", lambda sq=sq: verify_bc_image(engine, sq))
    return tally.record(bound=bound, squares=len(squares))


# classical comparison


def gz_records(engine: LaxFractions) -> List[CheckRecord]:
    model = engine.model
    axioms = Tally("classical_axioms", instances=1)
    comparison = Tally("gz_comparison")
    if not isinstance(model, TrivialModel):
        axioms.failures.append("the classical comparison needs a category with trivial 2-cells")
        return [axioms.record()]
    try:
        loc = localize_classical(model)
    except NotLocalizable as exc:
        axioms.failures.append(f"{exc} (witness {exc.witness!r})")
        return [axioms.record(axiom=exc.axiom)]
    homs = {}
    for a, b in product(model.objects(), repeat=2):
        result = comparison.attempt(f"hom({a}, {b})", lambda a=a, b=b: compare_hom(engine, loc, a, b))
        comparison.instances += 1
        if result is None:
            continue
        homs[f"{a}->{b}"] = {"components": result.components, "fraction_classes": result.fraction_classes}
        if not result.agrees:
            comparison.failures.extend(f"hom({a}, {b}): {problem}" for problem in result.mismatches)
    return [axioms.record(), comparison.record(homs=homs)]


# queries


def hom_record(engine: LaxFractions, a: Obj, b: Obj) -> CheckRecord:
    tally = Tally("hom_category", instances=1)
    hom = tally.attempt(f"hom({a!r}, {b!r})", lambda: engine.hom_category(a, b))
    if hom is None:
        return tally.record()
    tally.undetermined += hom.undetermined
    failed = sum(1 for index in hom.composition.values() if index < 0)
    if failed:
        tally.failures.append(f"{failed} composites fall outside the enumerated classes")
    classes = {f"{i}->{j}": len(cells) for (i, j), cells in sorted(hom.classes.items())}
    return tally.record(cospans=[repr(c) for c in hom.objects], two_morphisms=hom.two_morphisms,
                        classes=classes, preorder=hom.is_preorder(),
                        apex_bound=hom.apex_bound, ext_bound=hom.ext_bound)


def compose_record(engine: LaxFractions, cospans: Sequence[SigmaCospan]) -> CheckRecord:
    """Compose cospans in order of application and report the composite."""
    tally = Tally("cospan_composition", instances=1)

    def compose() -> SigmaCospan:
        result = cospans[0]
        for c in cospans[1:]:
            result = engine.compose_cospans(c, result)
        return result

    composite = tally.attempt("composite", compose)
    return tally.record(factors=[repr(c) for c in cospans],
                        composite=repr(composite) if composite is not None else None)


def two_cell_record(engine: LaxFractions, tm1: TwoMorphism, tm2: TwoMorphism) -> CheckRecord:
    """The answer to an equality query; only an undetermined answer fails the record."""
    tally = Tally("two_cell_equality", instances=1)
    verdict = tally.attempt("≈", lambda: engine.are_equivalent(tm1, tm2))
    if verdict is None:
        return tally.record()
    if verdict.decision is Decision.UNDETERMINED:
        tally.undetermined += 1
    return tally.record(decision=verdict.decision.value, method=verdict.method, bound=verdict.bound)
