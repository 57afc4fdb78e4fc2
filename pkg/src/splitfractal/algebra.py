"""Finite families of basic sets: canonical form and Boolean algebra.

A family is rasterized onto the grid spanned by its own endpoints, where every
Boolean operation is an elementwise operation on a boolean cell array, and is
then merged back into maximal pieces.  Because ``I(a, b) u I(b, c) = I(a, c)``
holds exactly in the split interval, a family of split sets behaves like a
union of half-open grid cells and the merge is lossless.

The Euclidean spaces reuse the same machinery for regular closed sets (finite
unions of closed intervals/boxes): a union of closed boxes is the closure of
the union of their open cells, so cell arrays determine the set.
"""
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from .errors import PreconditionError, SpaceMismatchError
from .exact import ONE, ZERO
from .spaces import (
    QUADRANT_SIDES,
    BasicInterval,
    BasicSquare,
    QuadPoint,
    SplitPoint,
    in_side_interval,
)

SPLIT_INTERVAL = "split_interval"
SPLIT_SQUARE = "split_square"
EUCLID_INTERVAL = "euclid_interval"
EUCLID_SQUARE = "euclid_square"
SPACES = (SPLIT_INTERVAL, SPLIT_SQUARE, EUCLID_INTERVAL, EUCLID_SQUARE)

Piece = Union[BasicInterval, BasicSquare]


def dimension(space: str) -> int:
    if space in (SPLIT_INTERVAL, EUCLID_INTERVAL):
        return 1
    if space in (SPLIT_SQUARE, EUCLID_SQUARE):
        return 2
    raise PreconditionError(f"unknown space {space!r}")


def is_split(space: str) -> bool:
    return space in (SPLIT_INTERVAL, SPLIT_SQUARE)


def full_piece(space: str) -> Piece:
    if dimension(space) == 1:
        return BasicInterval(ZERO, ONE)
    return BasicSquare(ZERO, ONE, ZERO, ONE)


# -- rasterization --------------------------------------------------------------

class _Grid:
    """Sorted breakpoints per axis plus cell arrays over them."""

    def __init__(self, dim: int, xs: List[Fraction], ys: List[Fraction]):
        self.dim = dim
        self.xs = xs
        self.ys = ys if dim == 2 else [ZERO, ONE]
        # integer-pair keys hash much faster than Fractions
        self._xi = {_key(v): i for i, v in enumerate(self.xs)}
        self._yi = {_key(v): i for i, v in enumerate(self.ys)}

    @classmethod
    def spanning(cls, dim: int, *pieces_lists: Sequence[Piece]) -> "_Grid":
        xs, ys = {_key(ZERO): ZERO, _key(ONE): ONE}, {_key(ZERO): ZERO, _key(ONE): ONE}
        for pieces in pieces_lists:
            for p in pieces:
                xs.setdefault(_key(p.a), p.a)
                xs.setdefault(_key(p.b), p.b)
                if dim == 2:
                    ys.setdefault(_key(p.c), p.c)
                    ys.setdefault(_key(p.d), p.d)
        return cls(dim, sorted(xs.values()), sorted(ys.values()))

    @classmethod
    def uniform(cls, dim: int, n: int) -> "_Grid":
        ticks = [Fraction(k, n) for k in range(n + 1)]
        return cls(dim, ticks, ticks)

    @property
    def shape(self):
        if self.dim == 1:
            return (len(self.xs) - 1,)
        return (len(self.xs) - 1, len(self.ys) - 1)

    def raster(self, pieces: Iterable[Piece]) -> np.ndarray:
        cells = np.zeros(self.shape, dtype=bool)
        xi, yi = self._xi, self._yi
        if self.dim == 1:
            for p in pieces:
                cells[xi[_key(p.a)]:xi[_key(p.b)]] = True
        else:
            for p in pieces:
                cells[xi[_key(p.a)]:xi[_key(p.b)], yi[_key(p.c)]:yi[_key(p.d)]] = True
        return cells

    def merge(self, cells: np.ndarray) -> Tuple[Piece, ...]:
        """Maximal runs along x, then stack identical runs along y."""
        xs, ys = self.xs, self.ys
        if self.dim == 1:
            return tuple(BasicInterval._trusted(xs[i0], xs[i1]) for i0, i1 in _runs(cells))
        boxes = []
        open_runs = {}
        ny = cells.shape[1]
        for j in range(ny + 1):
            runs = set(_runs(cells[:, j])) if j < ny else set()
            for run in [r for r in open_runs if r not in runs]:
                boxes.append((run[0], run[1], open_runs.pop(run), j))
            for run in runs:
                open_runs.setdefault(run, j)
        # index order equals endpoint order since the breakpoints are sorted
        boxes.sort()
        return tuple(BasicSquare._trusted(xs[i0], xs[i1], ys[j0], ys[j1]) for i0, i1, j0, j1 in boxes)


def _key(v: Fraction) -> Tuple[int, int]:
    return v.numerator, v.denominator


def _runs(row: np.ndarray) -> List[Tuple[int, int]]:
    if not row.any():
        return []
    padded = np.concatenate(([False], row, [False])).astype(np.int8)
    edges = np.flatnonzero(np.diff(padded))
    return [(int(edges[k]), int(edges[k + 1])) for k in range(0, len(edges), 2)]


# -- the family type --------------------------------------------------------------

@dataclass(frozen=True)
class Family:
    """A finite union of basic sets in canonical form.

    Build instances with :func:`canonicalize` (or :meth:`Family.of`); the
    constructor trusts its input.  Pieces are pairwise disjoint (overlapping
    only in boundaries for the Euclidean spaces), sorted, and maximal.
    """

    space: str
    pieces: Tuple[Piece, ...] = ()

    @classmethod
    def of(cls, space: str, pieces: Iterable[Piece] = ()) -> "Family":
        return canonicalize(pieces, space=space)

    @classmethod
    def empty(cls, space: str) -> "Family":
        return cls(space, ())

    @classmethod
    def full(cls, space: str) -> "Family":
        return cls(space, (full_piece(space),))

    @property
    def dim(self) -> int:
        return dimension(self.space)

    def __len__(self):
        return len(self.pieces)

    def __iter__(self):
        return iter(self.pieces)

    def __contains__(self, point) -> bool:
        return family_member(point, self)

    def __or__(self, other):
        return family_union(self, other)

    def __and__(self, other):
        return family_intersect(self, other)

    def __sub__(self, other):
        return family_difference(self, other)

    def __invert__(self):
        return family_complement(self)

    @cached_property
    def _index(self) -> Tuple[_Grid, np.ndarray]:
        # spanning-grid raster, built once per family for point lookups
        grid = _Grid.spanning(self.dim, self.pieces)
        return grid, grid.raster(self.pieces)

    def uniform_raster(self, level: int, base: int = 3) -> np.ndarray:
        """Boolean cell array of ``self`` on the uniform ``base**-level`` grid."""
        n = base ** level
        _require_on_grid(self, n)
        return _Grid.uniform(self.dim, n).raster(self.pieces)

    def uniform_cells(self, level: int, base: int = 3) -> Tuple[Piece, ...]:
        """Decompose into the cells of the uniform ``base**-level`` grid.

        Requires every endpoint to lie on that grid.
        """
        ticks = [Fraction(k, base ** level) for k in range(base ** level + 1)]
        cells = self.uniform_raster(level, base)
        if self.dim == 1:
            return tuple(BasicInterval._trusted(ticks[i], ticks[i + 1]) for i in np.flatnonzero(cells))
        return tuple(
            BasicSquare._trusted(ticks[i], ticks[i + 1], ticks[j], ticks[j + 1])
            for i, j in zip(*np.nonzero(cells))
        )


def _require_on_grid(F: Family, n: int):
    for p in F.pieces:
        for v in p.endpoints:
            if (v * n).denominator != 1:
                raise PreconditionError(f"endpoint {v} is not on the 1/{n} grid")


def _check_pieces(space: str, pieces: Sequence[Piece]):
    want = BasicInterval if dimension(space) == 1 else BasicSquare
    for p in pieces:
        if not isinstance(p, want):
            raise SpaceMismatchError(f"{type(p).__name__} piece in a {space} family")


def _infer_space(pieces: Sequence[Piece]) -> str:
    kinds = {type(p) for p in pieces}
    if len(kinds) > 1:
        raise SpaceMismatchError("mixed interval and square pieces")
    if not kinds:
        raise PreconditionError("cannot infer the space of an empty piece list")
    return SPLIT_INTERVAL if kinds.pop() is BasicInterval else SPLIT_SQUARE


def canonicalize(pieces: Iterable[Piece], space: str = None) -> Family:
    """Canonical family of the union of ``pieces`` (overlaps allowed)."""
    pieces = [p for p in pieces if p is not None]
    if space is None:
        space = _infer_space(pieces)
    _check_pieces(space, pieces)
    grid = _Grid.spanning(dimension(space), pieces)
    return Family(space, grid.merge(grid.raster(pieces)))


def _same_space(F1: Family, F2: Family):
    if F1.space != F2.space:
        raise SpaceMismatchError(f"{F1.space} vs {F2.space}")


def _binary(F1: Family, F2: Family, op) -> Family:
    _same_space(F1, F2)
    grid = _Grid.spanning(F1.dim, F1.pieces, F2.pieces)
    return Family(F1.space, grid.merge(op(grid.raster(F1.pieces), grid.raster(F2.pieces))))


def family_union(F1: Family, F2: Family) -> Family:
    return _binary(F1, F2, np.logical_or)


def family_intersect(F1: Family, F2: Family) -> Family:
    """Intersection; for the Euclidean spaces, the closure of the interiors'."""
    return _binary(F1, F2, np.logical_and)


def family_difference(F1: Family, F2: Family) -> Family:
    return _binary(F1, F2, lambda u, v: u & ~v)


def family_complement(F: Family) -> Family:
    """Clopen complement in the split spaces; closure of the complement otherwise."""
    return family_difference(Family.full(F.space), F)


def family_equals(F1: Family, F2: Family) -> bool:
    _same_space(F1, F2)
    grid = _Grid.spanning(F1.dim, F1.pieces, F2.pieces)
    return bool(np.array_equal(grid.raster(F1.pieces), grid.raster(F2.pieces)))


def family_subset(F1: Family, F2: Family) -> bool:
    _same_space(F1, F2)
    grid = _Grid.spanning(F1.dim, F1.pieces, F2.pieces)
    return not bool((grid.raster(F1.pieces) & ~grid.raster(F2.pieces)).any())


def is_empty(F: Family) -> bool:
    return not F.pieces


def cell_count(F: Family, level: int, base: int = 3) -> int:
    """Number of cells of the uniform ``base**-level`` grid that make up ``F``."""
    n = base ** level
    _require_on_grid(F, n)
    total = Fraction(0)
    for p in F.pieces:
        if F.dim == 1:
            total += p.b - p.a
        else:
            total += (p.b - p.a) * (p.d - p.c)
    count = total * n ** F.dim
    assert count.denominator == 1
    return int(count)


def _point_in_piece(space: str, point, p: Piece) -> bool:
    if space == SPLIT_INTERVAL:
        return in_side_interval(point.x, point.side, p.a, p.b)
    if space == SPLIT_SQUARE:
        sx, sy = QUADRANT_SIDES[point.t]
        return in_side_interval(point.x, sx, p.a, p.b) and in_side_interval(point.y, sy, p.c, p.d)
    if space == EUCLID_INTERVAL:
        return p.a <= point <= p.b
    x, y = point
    return p.a <= x <= p.b and p.c <= y <= p.d


def _check_point(space: str, point):
    ok = {
        SPLIT_INTERVAL: lambda q: isinstance(q, SplitPoint),
        SPLIT_SQUARE: lambda q: isinstance(q, QuadPoint),
        EUCLID_INTERVAL: lambda q: isinstance(q, Fraction),
        EUCLID_SQUARE: lambda q: isinstance(q, tuple) and len(q) == 2,
    }[space]
    if not ok(point):
        raise SpaceMismatchError(f"{point!r} is not a point of {space}")


def _cell_of(ticks: List[Fraction], v: Fraction, side: int) -> int:
    # side 1 cells are [a, b), side 0 cells are (a, b]
    return bisect_right(ticks, v) - 1 if side == 1 else bisect_left(ticks, v) - 1


def family_member(point, F: Family) -> bool:
    _check_point(F.space, point)
    if F.space == SPLIT_INTERVAL and len(F.pieces) > 16:
        grid, cells = F._index
        return bool(cells[_cell_of(grid.xs, point.x, point.side)])
    if F.space == SPLIT_SQUARE and len(F.pieces) > 16:
        grid, cells = F._index
        sx, sy = QUADRANT_SIDES[point.t]
        return bool(cells[_cell_of(grid.xs, point.x, sx), _cell_of(grid.ys, point.y, sy)])
    return any(_point_in_piece(F.space, point, p) for p in F.pieces)
