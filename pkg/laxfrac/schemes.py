"""
Σ-schemes: staircase-shaped grids of Σ-squares.

A level-n scheme is bounded on the upper left by a staircase border
r1, g1, ..., rn, gn. Run k starts at the corner B_k; its horizontal part
goes right from B_k to I_k and its vertical part goes down from B_k to
J_k = I_{k+1}. Runs may be padded with identity segments. Points are
(row, column) pairs on the unit grid and the lower right corner is
R = (rows, cols). The scheme presents the cospan (l∘f0, m∘t0) where l is
the right column, m the bottom row, and f0, t0 are whiskers into I_1 and
J_n.
"""

import logging
from dataclasses import dataclass, replace
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from laxfrac.errors import BoundaryError, NotReplaceable, PreconditionError
from laxfrac.sigma_calculus import (SigmaSquare, SquareCheck, certify, hcompose_squares, validate_square,
                                    vcompose_squares)
from laxfrac.two_cat_core import Obj, OneCell, TwoCatModel

logger = logging.getLogger(__name__)

Point = Tuple[int, int]


@dataclass(frozen=True)
class Segment:
    start: Point
    end: Point
    cell: OneCell


@dataclass(frozen=True)
class Tile:
    """A Σ-square occupying rows [top, bottom) and columns [left, right)."""

    top: int
    left: int
    bottom: int
    right: int
    square: SigmaSquare

    @property
    def corner(self) -> Point:
        return self.top, self.left

    @property
    def rect(self) -> Tuple[int, int, int, int]:
        return self.top, self.left, self.bottom, self.right

    def unit_cells(self) -> Iterable[Point]:
        return ((i, j) for i in range(self.top, self.bottom) for j in range(self.left, self.right))

    def inside(self, top: int, left: int, bottom: int, right: int) -> bool:
        return top <= self.top and left <= self.left and self.bottom <= bottom and self.right <= right

    def shifted(self, rows: int, cols: int) -> "Tile":
        return Tile(self.top + rows, self.left + cols, self.bottom + rows, self.right + cols, self.square)


@dataclass(frozen=True)
class BorderRun:
    """One step of the staircase: horizontal segments B_k→I_k, vertical segments B_k→J_k."""

    horizontal: Tuple[OneCell, ...]
    vertical: Tuple[OneCell, ...]


@dataclass(frozen=True)
class SigmaScheme:
    runs: Tuple[BorderRun, ...]
    tiles: Tuple[Tile, ...]
    f0: OneCell
    t0: OneCell

    @property
    def level(self) -> int:
        return len(self.runs)

    @property
    def rows(self) -> int:
        return sum(len(run.vertical) for run in self.runs)

    @property
    def cols(self) -> int:
        return sum(len(run.horizontal) for run in self.runs)

    def corners(self) -> List[Point]:
        """The corners B_1, ..., B_n."""
        found, row, col = [], 0, self.cols
        for run in self.runs:
            col -= len(run.horizontal)
            found.append((row, col))
            row += len(run.vertical)
        return found

    def segments(self) -> List[Segment]:
        found = []
        for run, (row, col) in zip(self.runs, self.corners()):
            found += [Segment((row, col + i), (row, col + i + 1), cell) for i, cell in enumerate(run.horizontal)]
            found += [Segment((row + i, col), (row + i + 1, col), cell) for i, cell in enumerate(run.vertical)]
        return found

    def region(self) -> Set[Point]:
        cells = set()
        for run, (row, col) in zip(self.runs, self.corners()):
            for i in range(row, row + len(run.vertical)):
                cells.update((i, j) for j in range(col, self.cols))
        return cells

    def tile_at(self, p: Point) -> Optional[Tile]:
        return next((tile for tile in self.tiles if tile.corner == p), None)


def _sorted_tiles(tiles: Iterable[Tile]) -> Tuple[Tile, ...]:
    return tuple(sorted(tiles, key=lambda tile: tile.rect))


def make_scheme(runs: Sequence[BorderRun], tiles: Iterable[Tile], f0: OneCell, t0: OneCell) -> SigmaScheme:
    return SigmaScheme(tuple(runs), _sorted_tiles(tiles), f0, t0)


def unpadded_runs(cells: Sequence[OneCell]) -> Tuple[BorderRun, ...]:
    """Runs for the border (r1, g1, ..., rn, gn) with one segment each."""
    if len(cells) % 2 or not cells:
        raise BoundaryError("a border needs an even, positive number of 1-cells")
    return tuple(BorderRun((cells[i],), (cells[i + 1],)) for i in range(0, len(cells), 2))


def border_cells(model: TwoCatModel, scheme: SigmaScheme) -> List[OneCell]:
    """The composites (r1, g1, ..., rn, gn)."""
    result = []
    for run in scheme.runs:
        result += [model.compose(*reversed(run.horizontal)), model.compose(*reversed(run.vertical))]
    return result


def right_column(scheme: SigmaScheme, upto: Optional[int] = None) -> List[Tile]:
    stop = scheme.rows if upto is None else upto
    return sorted((t for t in scheme.tiles if t.right == scheme.cols and t.bottom <= stop), key=lambda t: t.top)


def bottom_row(scheme: SigmaScheme, upto: Optional[int] = None) -> List[Tile]:
    stop = scheme.cols if upto is None else upto
    return sorted((t for t in scheme.tiles if t.bottom == scheme.rows and t.right <= stop), key=lambda t: t.left)


def chain(model: TwoCatModel, cells: Sequence[OneCell], start: Obj) -> OneCell:
    """Composite of a path of 1-cells listed in travel order; identity on ``start`` when empty."""
    if not cells:
        return model.id1(start)
    return model.compose(*reversed(cells))


def scheme_legs(model: TwoCatModel, scheme: SigmaScheme) -> Tuple[OneCell, OneCell]:
    """(l∘f0, m∘t0)"""
    l = chain(model, [t.square.right for t in right_column(scheme)], model.cod(scheme.f0))
    m = chain(model, [t.square.bottom for t in bottom_row(scheme)], model.cod(scheme.t0))
    return model.compose(l, scheme.f0), model.compose(m, scheme.t0)


# validation


def _match_line(model: TwoCatModel, side_a: List[Tuple[int, int, OneCell]],
                side_b: List[Tuple[int, int, OneCell]]) -> Optional[str]:
    """Both sides of a grid line must cover the same intervals with equal composites."""
    side_a, side_b = sorted(side_a, key=lambda x: x[0]), sorted(side_b, key=lambda x: x[0])
    i = j = 0
    while i < len(side_a) or j < len(side_b):
        if i >= len(side_a) or j >= len(side_b) or side_a[i][0] != side_b[j][0]:
            return "edges on a grid line are not aligned"
        chain_a, chain_b = [side_a[i][2]], [side_b[j][2]]
        end_a, end_b = side_a[i][1], side_b[j][1]
        i, j = i + 1, j + 1
        while end_a != end_b:
            if end_a < end_b:
                if i >= len(side_a) or side_a[i][0] != end_a:
                    return "gap along a grid line"
                chain_a.append(side_a[i][2])
                end_a = side_a[i][1]
                i += 1
            else:
                if j >= len(side_b) or side_b[j][0] != end_b:
                    return "gap along a grid line"
                chain_b.append(side_b[j][2])
                end_b = side_b[j][1]
                j += 1
        try:
            if model.compose(*reversed(chain_a)) != model.compose(*reversed(chain_b)):
                return "abutting edges carry different 1-cells"
        except BoundaryError as exc:
            return f"edges do not compose: {exc}"
    return None


def validate_scheme(model: TwoCatModel, scheme: SigmaScheme) -> SquareCheck:
    """Tiles are Σ-squares that exactly cover the staircase region and agree on shared edges."""
    if not scheme.runs or any(not run.horizontal or not run.vertical for run in scheme.runs):
        return SquareCheck(False, "every run needs a horizontal and a vertical segment")
    for run in scheme.runs:
        if not model.in_sigma(model.compose(*reversed(run.horizontal))):
            return SquareCheck(False, "horizontal border run is not in Σ")
    for tile in scheme.tiles:
        check = validate_square(model, tile.square)
        if not check:
            return SquareCheck(False, f"tile at {tile.corner}: {check.diagnosis}")
    covered: Set[Point] = set()
    for tile in scheme.tiles:
        cells = set(tile.unit_cells())
        if cells & covered:
            return SquareCheck(False, f"tile at {tile.corner} overlaps another tile")
        covered |= cells
    if covered != scheme.region():
        return SquareCheck(False, "tiles do not cover the staircase region")

    segments = scheme.segments()
    for y in range(scheme.rows):
        side_a = [(t.left, t.right, t.square.bottom) for t in scheme.tiles if t.bottom == y]
        side_a += [(s.start[1], s.end[1], s.cell) for s in segments if s.start[0] == s.end[0] == y]
        side_b = [(t.left, t.right, t.square.top) for t in scheme.tiles if t.top == y]
        problem = _match_line(model, side_a, side_b)
        if problem:
            return SquareCheck(False, f"row {y}: {problem}")
    for x in range(scheme.cols):
        side_a = [(t.top, t.bottom, t.square.right) for t in scheme.tiles if t.right == x]
        side_a += [(s.start[0], s.end[0], s.cell) for s in segments if s.start[1] == s.end[1] == x]
        side_b = [(t.top, t.bottom, t.square.left) for t in scheme.tiles if t.left == x]
        problem = _match_line(model, side_a, side_b)
        if problem:
            return SquareCheck(False, f"column {x}: {problem}")

    first, last = scheme.runs[0], scheme.runs[-1]
    if model.cod(scheme.f0) != model.cod(first.horizontal[-1]):
        return SquareCheck(False, "left whisker does not end at I_1")
    if model.cod(scheme.t0) != model.cod(last.vertical[-1]):
        return SquareCheck(False, "right whisker does not end at J_n")
    if not model.in_sigma(scheme.t0):
        return SquareCheck(False, "right whisker is not in Σ")
    return SquareCheck(True)


# regions


def paste_tiles(model: TwoCatModel, tiles: Sequence[Tile]) -> SigmaSquare:
    """Paste a rectangular block of tiles into one Σ-square by guillotine cuts."""
    if len(tiles) == 1:
        return tiles[0].square
    top, left = min(t.top for t in tiles), min(t.left for t in tiles)
    bottom, right = max(t.bottom for t in tiles), max(t.right for t in tiles)
    for y in range(top + 1, bottom):
        if all(t.bottom <= y or t.top >= y for t in tiles):
            upper = paste_tiles(model, [t for t in tiles if t.bottom <= y])
            lower = paste_tiles(model, [t for t in tiles if t.top >= y])
            return vcompose_squares(model, lower, upper)
    for x in range(left + 1, right):
        if all(t.right <= x or t.left >= x for t in tiles):
            west = paste_tiles(model, [t for t in tiles if t.right <= x])
            east = paste_tiles(model, [t for t in tiles if t.left >= x])
            return hcompose_squares(model, west, east)
    raise NotReplaceable("block of tiles admits no guillotine cut")


def region_tiles(scheme: SigmaScheme, p: Point) -> List[Tile]:
    """Tiles of the rectangle from ``p`` to R; it must be a union of tiles inside the region."""
    top, left = p
    if not (0 <= top < scheme.rows and 0 <= left < scheme.cols):
        raise NotReplaceable(f"point {p} is outside the scheme")
    rect = {(i, j) for i in range(top, scheme.rows) for j in range(left, scheme.cols)}
    if not rect <= scheme.region():
        raise NotReplaceable(f"rectangle from {p} leaves the staircase region")
    inside = []
    for tile in scheme.tiles:
        cells = set(tile.unit_cells())
        if cells <= rect:
            inside.append(tile)
        elif cells & rect:
            raise NotReplaceable(f"tile at {tile.corner} crosses the rectangle from {p}")
    return inside


def replace_region(model: TwoCatModel, scheme: SigmaScheme, p: Point, new_tiles: Sequence[Tile]) -> SigmaScheme:
    old = region_tiles(scheme, p)
    rect = (p[0], p[1], scheme.rows, scheme.cols)
    if not all(t.inside(*rect) for t in new_tiles):
        raise NotReplaceable("replacement tiles leave the rectangle")
    old_sq, new_sq = paste_tiles(model, old), paste_tiles(model, list(new_tiles))
    if (old_sq.top, old_sq.left) != (new_sq.top, new_sq.left):
        raise NotReplaceable("replacement changes the top or left edge of the region")
    kept = [t for t in scheme.tiles if t not in old]
    result = replace(scheme, tiles=_sorted_tiles(kept + list(new_tiles)))
    check = validate_scheme(model, result)
    if not check:
        raise NotReplaceable(f"replacement yields an invalid scheme: {check.diagnosis}")
    return result


def _fill(model: TwoCatModel, origin: Point, tops: Sequence[Tuple[int, OneCell]],
          lefts: Sequence[Tuple[int, OneCell]]) -> List[Tile]:
    """Canonical squares on the grid spanned by top edges (width, cell) and left edges (height, cell)."""
    tiles: List[Tile] = []
    above = [cell for _, cell in tops]
    row = origin[0]
    for height, left_cell in lefts:
        col, west = origin[1], left_cell
        below = []
        for j, (width, _) in enumerate(tops):
            sq = certify(model, model.canonical_square(above[j], west), "canonical square")
            tiles.append(Tile(row, col, row + height, col + width, sq))
            below.append(sq.bottom)
            west = sq.right
            col += width
        above = below
        row += height
    return tiles


def _edges_along_row(scheme: SigmaScheme, y: int, start: int, stop: int) -> List[Tuple[int, OneCell]]:
    edges = [(t.left, t.right, t.square.bottom) for t in scheme.tiles if t.bottom == y]
    edges += [(s.start[1], s.end[1], s.cell) for s in scheme.segments() if s.start[0] == s.end[0] == y]
    return _subdivision(edges, start, stop)


def _edges_along_column(scheme: SigmaScheme, x: int, start: int, stop: int) -> List[Tuple[int, OneCell]]:
    edges = [(t.top, t.bottom, t.square.right) for t in scheme.tiles if t.right == x]
    edges += [(s.start[0], s.end[0], s.cell) for s in scheme.segments() if s.start[1] == s.end[1] == x]
    return _subdivision(edges, start, stop)


def _subdivision(edges: List[Tuple[int, int, OneCell]], start: int, stop: int) -> List[Tuple[int, OneCell]]:
    picked = sorted((e for e in edges if e[1] > start and e[0] < stop), key=lambda e: e[0])
    position, result = start, []
    for a, b, cell in picked:
        if a != position or b > stop:
            raise NotReplaceable("outside edges are not aligned with the rectangle")
        result.append((b - a, cell))
        position = b
    if position != stop:
        raise NotReplaceable("outside edges do not span the rectangle")
    return result


def canonical_fill(model: TwoCatModel, scheme: SigmaScheme, p: Point) -> List[Tile]:
    """Canonical squares for the rectangle from ``p`` to R along the outside subdivisions."""
    region_tiles(scheme, p)
    tops = _edges_along_row(scheme, p[0], p[1], scheme.cols)
    lefts = _edges_along_column(scheme, p[1], p[0], scheme.rows)
    return _fill(model, p, tops, lefts)


def canonical_scheme(model: TwoCatModel, runs: Sequence[BorderRun], f0: OneCell, t0: OneCell) -> SigmaScheme:
    """Can(S): canonical squares filled run by run along the padded staircase."""
    scheme = make_scheme(runs, (), f0, t0)
    tiles: List[Tile] = []
    for run, (row, col) in zip(scheme.runs, scheme.corners()):
        partial = replace(scheme, tiles=_sorted_tiles(tiles))
        tops = _edges_along_row(partial, row, col, scheme.cols)
        lefts = [(1, cell) for cell in run.vertical]
        tiles += _fill(model, (row, col), tops, lefts)
    result = replace(scheme, tiles=_sorted_tiles(tiles))
    check = validate_scheme(model, result)
    if not check:
        raise PreconditionError(f"border admits no canonical scheme: {check.diagnosis}")
    return result


# configurations of interest

TEMPLATES: Dict[str, Tuple[Tuple[int, int, int, int], ...]] = {
    "da": ((0, 2, 2, 3), (1, 1, 2, 2), (2, 0, 3, 3)),
    "db": ((0, 2, 1, 3), (1, 1, 2, 3), (2, 0, 3, 3)),
    "ua": ((0, 2, 3, 3), (1, 1, 3, 2), (2, 0, 3, 1)),
    "ub": ((0, 2, 3, 3), (1, 1, 2, 2), (2, 0, 3, 2)),
    "s": ((0, 2, 1, 3), (1, 1, 3, 3), (2, 0, 3, 1)),
    "dc": ((0, 2, 1, 3), (1, 1, 2, 2), (1, 2, 2, 3), (2, 1, 3, 3), (3, 0, 4, 3)),
    "s1": ((0, 2, 2, 3), (1, 1, 2, 2), (2, 1, 4, 3), (3, 0, 4, 1)),
}

PADDED_TAGS = ("dc", "s1")


def _is_padded_pattern(model: TwoCatModel, scheme: SigmaScheme) -> Optional[bool]:
    """True for the padded level-3 border, False for the plain one, None otherwise."""
    if scheme.level != 3 or any(len(run.horizontal) != 1 for run in scheme.runs):
        return None
    lengths = [len(run.vertical) for run in scheme.runs]
    if lengths == [1, 1, 1]:
        return False
    if lengths == [1, 2, 1] and model.is_identity(scheme.runs[1].vertical[0]):
        return True
    return None


def classify_configuration(model: TwoCatModel, scheme: SigmaScheme) -> List[str]:
    """Tags of every level-3 template the scheme refines."""
    padded = _is_padded_pattern(model, scheme)
    if padded is None:
        return []
    tags = []
    for tag, rects in TEMPLATES.items():
        if (tag in PADDED_TAGS) != padded:
            continue
        if all(any(tile.inside(*rect) for rect in rects) for tile in scheme.tiles):
            tags.append(tag)
    return tags


def step_type(model: TwoCatModel, scheme: SigmaScheme, p: Point) -> Optional[str]:
    """Type of a step whose rectangle starts at ``p``."""
    corners = scheme.corners()
    names = {2: ("u", "d"), 3: ("u", "s", "d")}.get(scheme.level)
    if names and p in corners:
        return names[corners.index(p)]
    for k, (run, (row, col)) in enumerate(zip(scheme.runs, corners)):
        if col != p[1] or not row < p[0] < row + len(run.vertical):
            continue
        offset = p[0] - row
        if scheme.level == 3 and k == 1 and all(model.is_identity(c) for c in run.vertical[:offset]):
            return "s1"
        if k == scheme.level - 1 and all(model.is_identity(c) for c in run.vertical[offset:]):
            return "d1"
    return None


def type_corner(model: TwoCatModel, scheme: SigmaScheme, tag: str) -> Point:
    corners = scheme.corners()
    plain = {"u": 0, "s": 1, "d": scheme.level - 1}
    if tag in plain:
        return corners[plain[tag]]
    k = 1 if tag == "s1" else scheme.level - 1
    row, col = corners[k]
    vertical = scheme.runs[k].vertical
    for offset in range(1, len(vertical)):
        if step_type(model, scheme, (row + offset, col)) == tag:
            return row + offset, col
    raise PreconditionError(f"scheme has no corner of type {tag}")


# whiskering


def lift_left(model: TwoCatModel, scheme: SigmaScheme, r: OneCell, f: OneCell) -> SigmaScheme:
    """Precompose with the cospan (f, r): new first run (r, f0) and a column tile Can(r, l∘f0)."""
    l = chain(model, [t.square.right for t in right_column(scheme)], model.cod(scheme.f0))
    column = certify(model, model.canonical_square(r, model.compose(l, scheme.f0)), "canonical square")
    tiles = [t.shifted(1, 0) for t in scheme.tiles]
    tiles.append(Tile(0, scheme.cols, scheme.rows + 1, scheme.cols + 1, column))
    runs = (BorderRun((r,), (scheme.f0,)),) + scheme.runs
    return make_scheme(runs, tiles, f, scheme.t0)


def lift_below(model: TwoCatModel, scheme: SigmaScheme, k: OneCell, s: OneCell) -> SigmaScheme:
    """Postcompose with the cospan (k, s): new last run (t0, k) and a row tile Can(m∘t0, k)."""
    m = chain(model, [t.square.bottom for t in bottom_row(scheme)], model.cod(scheme.t0))
    row = certify(model, model.canonical_square(model.compose(m, scheme.t0), k), "canonical square")
    tiles = [t.shifted(0, 1) for t in scheme.tiles]
    tiles.append(Tile(scheme.rows, 0, scheme.rows + 1, scheme.cols + 1, row))
    runs = scheme.runs + (BorderRun((scheme.t0,), (k,)),)
    return make_scheme(runs, tiles, scheme.f0, s)


def describe_scheme(scheme: SigmaScheme) -> Dict[str, object]:
    return {
        "level": scheme.level,
        "rows": scheme.rows,
        "cols": scheme.cols,
        "tiles": [{"rect": list(t.rect), "top": repr(t.square.top), "left": repr(t.square.left),
                   "right": repr(t.square.right), "bottom": repr(t.square.bottom)} for t in scheme.tiles],
    }
