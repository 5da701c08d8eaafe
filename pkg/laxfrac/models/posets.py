"""
Finite posets, monotone maps and lower-set lattices.

Posets carry a read-only boolean numpy matrix ``leq`` with ``leq[i, j]``
iff element i is below element j. Elements are indexed 0..n-1 and carry
names used in model files and reports.
"""

import logging
from functools import cached_property, lru_cache
from itertools import permutations, product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from laxfrac.errors import SpecError

logger = logging.getLogger(__name__)


def _frozen(matrix: np.ndarray) -> np.ndarray:
    matrix = np.array(matrix, dtype=bool)
    matrix.flags.writeable = False
    return matrix


def reflexive_transitive_closure(rel: np.ndarray) -> np.ndarray:
    """Warshall closure of a boolean relation, with the diagonal added."""
    closure = np.array(rel, dtype=bool)
    n = len(closure)
    closure[np.diag_indices(n)] = True
    for k in range(n):
        closure |= np.outer(closure[:, k], closure[k, :])
    return closure


def is_partial_order(rel: np.ndarray) -> bool:
    n = len(rel)
    if n == 0:
        return True
    if not rel[np.diag_indices(n)].all():
        return False
    if (rel & rel.T).sum() > n:
        return False
    composite = (rel.astype(np.int64) @ rel.astype(np.int64)) > 0
    return not (composite & ~rel).any()


class FinitePoset:
    """Hashable, immutable finite partial order with named elements."""

    def __init__(self, elements: Sequence[str], leq: np.ndarray, check: bool = True):
        self.elements: Tuple[str, ...] = tuple(str(e) for e in elements)
        self.leq = _frozen(leq) if len(self.elements) else np.zeros((0, 0), dtype=bool)
        n = len(self.elements)
        if self.leq.shape != (n, n):
            raise SpecError(f"order matrix has shape {self.leq.shape}, expected {(n, n)}")
        if len(set(self.elements)) != n:
            raise SpecError(f"duplicate element names in {list(self.elements)}")
        if check and not is_partial_order(self.leq):
            raise SpecError(f"relation on {list(self.elements)} is not a partial order")

    @classmethod
    def from_relation(cls, elements: Sequence[str], pairs: Iterable[Tuple[str, str]]) -> "FinitePoset":
        """The order generated by ``pairs`` (a ≤ b), rejecting cycles between distinct elements."""
        index = {name: i for i, name in enumerate(elements)}
        rel = np.zeros((len(index), len(index)), dtype=bool)
        for a, b in pairs:
            if a not in index or b not in index:
                raise SpecError(f"unknown element in pair ({a}, {b})")
            rel[index[a], index[b]] = True
        return cls(elements, reflexive_transitive_closure(rel))

    @classmethod
    def chain(cls, n: int) -> "FinitePoset":
        return cls([str(i) for i in range(n)], np.triu(np.ones((n, n), dtype=bool)))

    @classmethod
    def discrete(cls, n: int) -> "FinitePoset":
        return cls([str(i) for i in range(n)], np.eye(n, dtype=bool))

    @classmethod
    def empty(cls) -> "FinitePoset":
        return cls([], np.zeros((0, 0), dtype=bool))

    @classmethod
    def point(cls) -> "FinitePoset":
        return cls(["*"], np.ones((1, 1), dtype=bool))

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def n(self) -> int:
        return len(self.elements)

    def le(self, i: int, j: int) -> bool:
        return bool(self.leq[i, j])

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise SpecError(f"no element named {name!r} in {list(self.elements)}") from None

    @cached_property
    def _key(self) -> Tuple[Tuple[str, ...], bytes]:
        return self.elements, self.leq.tobytes()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FinitePoset) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        covers = [(self.elements[i], self.elements[j]) for i, j in self.cover_pairs]
        return f"Poset({list(self.elements)}, covers={covers})"

    @cached_property
    def cover_pairs(self) -> List[Tuple[int, int]]:
        lt = self.leq.copy()
        lt[np.diag_indices(self.n)] = False
        between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        child = lt & ~between
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(child))]

    # lower sets

    def down_closure(self, subset: Iterable[int]) -> FrozenSet[int]:
        subset = list(subset)
        if not subset:
            return frozenset()
        below = self.leq[:, subset].any(axis=1)
        return frozenset(int(i) for i in np.nonzero(below)[0])

    def is_lower(self, subset: Iterable[int]) -> bool:
        subset = frozenset(subset)
        return self.down_closure(subset) == subset

    @cached_property
    def lower_sets(self) -> List[FrozenSet[int]]:
        """All down-closed subsets, ordered by their bitmask."""
        found = []
        for mask in range(1 << self.n):
            subset = frozenset(i for i in range(self.n) if mask >> i & 1)
            if self.is_lower(subset):
                found.append(subset)
        return found


def quotient_preorder(elements: Sequence[str], rel: np.ndarray) -> Tuple[FinitePoset, List[int]]:
    """Collapse the preorder generated by ``rel`` to its poset of strongly connected classes.

    Returns the poset and the class index of every original element. Classes
    are numbered by their first member; a class is named by its members joined with '='.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(elements)))
    graph.add_edges_from((int(i), int(j)) for i, j in zip(*np.nonzero(rel)))
    classes = sorted((sorted(c) for c in nx.strongly_connected_components(graph)), key=lambda members: members[0])
    cls_of: List[int] = [0] * len(elements)
    for index, members in enumerate(classes):
        for j in members:
            cls_of[j] = index
    closure = nx.transitive_closure(graph, reflexive=True)
    names = ["=".join(elements[j] for j in members) for members in classes]
    reps = [members[0] for members in classes]
    leq = np.array([[closure.has_edge(a, b) for b in reps] for a in reps], dtype=bool).reshape(len(reps), len(reps))
    return FinitePoset(names, leq), cls_of


class MonotoneMap:
    """Order-preserving map between finite posets, stored as an index assignment."""

    __slots__ = ("dom", "cod", "assignment", "_hash")

    def __init__(self, dom: FinitePoset, cod: FinitePoset, assignment: Sequence[int], check: bool = True):
        self.dom = dom
        self.cod = cod
        self.assignment: Tuple[int, ...] = tuple(int(a) for a in assignment)
        self._hash = hash((dom, cod, self.assignment))
        if len(self.assignment) != dom.n or any(not 0 <= a < cod.n for a in self.assignment):
            raise SpecError(f"assignment {self.assignment} does not map {dom!r} into {cod!r}")
        if check and not self.is_monotone():
            raise SpecError(f"assignment {self.assignment} is not monotone")

    @classmethod
    def identity(cls, poset: FinitePoset) -> "MonotoneMap":
        return cls(poset, poset, range(poset.n), check=False)

    @classmethod
    def from_names(cls, dom: FinitePoset, cod: FinitePoset, mapping: Dict[str, str]) -> "MonotoneMap":
        missing = [e for e in dom.elements if e not in mapping]
        if missing:
            raise SpecError(f"assignment misses elements {missing}")
        return cls(dom, cod, [cod.index(mapping[e]) for e in dom.elements])

    def __call__(self, i: int) -> int:
        return self.assignment[i]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, MonotoneMap) and self.assignment == other.assignment
                and self.dom == other.dom and self.cod == other.cod)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        pairs = ", ".join(f"{self.dom.elements[i]}->{self.cod.elements[a]}"
                          for i, a in enumerate(self.assignment))
        return f"Map({self.dom.n}->{self.cod.n}: {pairs})"

    def after(self, f: "MonotoneMap") -> "MonotoneMap":
        """self∘f"""
        return MonotoneMap(f.dom, self.cod, [self.assignment[a] for a in f.assignment], check=False)

    def is_monotone(self) -> bool:
        if self.dom.n == 0:
            return True
        idx = np.array(self.assignment)
        return bool(self.cod.leq[np.ix_(idx, idx)][self.dom.leq].all())

    def is_injective(self) -> bool:
        return len(set(self.assignment)) == len(self.assignment)

    def reflects_order(self) -> bool:
        if self.dom.n == 0:
            return True
        idx = np.array(self.assignment)
        return bool((self.cod.leq[np.ix_(idx, idx)] == self.dom.leq).all())

    def is_embedding(self) -> bool:
        return self.is_injective() and self.reflects_order()

    def pointwise_le(self, other: "MonotoneMap") -> bool:
        return all(self.cod.le(a, b) for a, b in zip(self.assignment, other.assignment))

    # lower-set functors: Df sends L to the down-closure of f(L); its right adjoint is the preimage

    def image_down(self, lower: Iterable[int]) -> FrozenSet[int]:
        return self.cod.down_closure(self.assignment[i] for i in lower)

    def preimage(self, lower: Iterable[int]) -> FrozenSet[int]:
        lower = frozenset(lower)
        return frozenset(i for i, a in enumerate(self.assignment) if a in lower)


def enumerate_monotone_maps(dom: FinitePoset, cod: FinitePoset) -> List[MonotoneMap]:
    """All monotone maps dom → cod in lexicographic order of assignments."""
    maps = []
    for assignment in product(range(cod.n), repeat=dom.n):
        candidate = MonotoneMap(dom, cod, assignment, check=False)
        if candidate.is_monotone():
            maps.append(candidate)
    return maps


def _canonical_key(leq: np.ndarray) -> bytes:
    n = len(leq)
    return min(leq[np.ix_(p, p)].tobytes() for p in map(list, permutations(range(n)))) if n else b""


@lru_cache(maxsize=None)
def enumerate_posets(n: int) -> Tuple[FinitePoset, ...]:
    """One naturally labelled representative per isomorphism class of n-element posets.

    Representatives are ordered by the bitmask of their strict upper-triangular relation.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen = set()
    found = []
    for mask in range(1 << len(pairs)):
        rel = np.eye(n, dtype=bool)
        for bit, (i, j) in enumerate(pairs):
            if mask >> bit & 1:
                rel[i, j] = True
        if not is_partial_order(rel):
            continue
        key = _canonical_key(rel)
        if key in seen:
            continue
        seen.add(key)
        found.append(FinitePoset([str(i) for i in range(n)], rel, check=False))
    logger.debug(f"enumerated {len(found)} posets of size {n}")
    return tuple(found)


def posets_up_to(size: int) -> List[FinitePoset]:
    return [p for n in range(size + 1) for p in enumerate_posets(n)]


def find_isomorphism(p: FinitePoset, q: FinitePoset) -> Optional[MonotoneMap]:
    if p.n != q.n:
        return None
    for perm in permutations(range(q.n)):
        if p.n == 0 or (q.leq[np.ix_(perm, perm)] == p.leq).all():
            return MonotoneMap(p, q, perm, check=False)
    return None


class LowerSetLattice:
    """The lattice D(P) of down-closed subsets of P ordered by inclusion."""

    def __init__(self, base: FinitePoset):
        self.base = base
        self.sets: List[FrozenSet[int]] = list(base.lower_sets)

    def __len__(self) -> int:
        return len(self.sets)

    def meet(self, a: FrozenSet[int], b: FrozenSet[int]) -> FrozenSet[int]:
        return a & b

    def join(self, a: FrozenSet[int], b: FrozenSet[int]) -> FrozenSet[int]:
        return a | b

    def is_lattice(self) -> bool:
        members = set(self.sets)
        return (frozenset() in members and frozenset(range(self.base.n)) in members
                and all(a & b in members and a | b in members for a, b in product(self.sets, repeat=2)))

    def as_poset(self) -> FinitePoset:
        names = ["{" + ",".join(self.base.elements[i] for i in sorted(s)) + "}" for s in self.sets]
        leq = np.array([[a <= b for b in self.sets] for a in self.sets], dtype=bool)
        return FinitePoset(names, leq)


def lower_set_functor_preserves(f: MonotoneMap) -> bool:
    """Df preserves binary joins and the empty join; the preimage preserves meets and joins."""
    dom, cod = LowerSetLattice(f.dom), LowerSetLattice(f.cod)
    if f.image_down(frozenset()) != frozenset():
        return False
    for a, b in product(dom.sets, repeat=2):
        if f.image_down(a | b) != f.image_down(a) | f.image_down(b):
            return False
    for a, b in product(cod.sets, repeat=2):
        if f.preimage(a & b) != f.preimage(a) & f.preimage(b) or f.preimage(a | b) != f.preimage(a) | f.preimage(b):
            return False
    return True
