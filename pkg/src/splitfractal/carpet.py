"""Sierpinski carpet and split carpet: approximants, membership, hole oracles.

A level-k hole is the middle ninth of a level-(k-1) triadic cell::

    ((3l+1)/3^k, (3l+2)/3^k) x ((3m+1)/3^k, (3m+2)/3^k),   0 <= l, m < 3^(k-1)

removed as an open square from the Euclidean carpet and as the basic split
square ``Q(...)`` from the split carpet.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import List, Optional, Tuple

from .algebra import EUCLID_SQUARE, SPLIT_SQUARE, Family, canonicalize, family_difference
from .errors import InconsistencyError, PreconditionError, ResourceLimitError
from .exact import ONE, ZERO, as_rational, ternary_stream
from .ifs import DEFAULT_CAP
from .spaces import BasicSquare, QuadPoint, intersect_squares, member_square

DEFAULT_DEPTH = 6


@dataclass(frozen=True)
class HoleIndex:
    k: int
    l: int
    m: int

    def __post_init__(self):
        span = 3 ** (self.k - 1) if self.k >= 1 else 0
        if self.k < 1 or not (0 <= self.l < span and 0 <= self.m < span):
            raise PreconditionError(f"hole index {self} out of range")

    def square(self) -> BasicSquare:
        n = 3 ** self.k
        return BasicSquare._trusted(Fraction(3 * self.l + 1, n), Fraction(3 * self.l + 2, n),
                           Fraction(3 * self.m + 1, n), Fraction(3 * self.m + 2, n))


def holes(k: int) -> List[BasicSquare]:
    span = 3 ** (k - 1)
    return [HoleIndex(k, l, m).square() for l in range(span) for m in range(span)]


@dataclass(frozen=True)
class CarpetApprox:
    level: int
    cells: Family


def _guard(k: int, cap: int):
    if k < 0:
        raise PreconditionError("level must be nonnegative")
    if 8 ** k > cap:
        raise ResourceLimitError(8 ** k, cap, "cells")


@lru_cache(maxsize=None)
def _carpet_family(space: str, k: int) -> Family:
    if k == 0:
        return Family.full(space)
    return family_difference(_carpet_family(space, k - 1), canonicalize(holes(k), space=space))


def split_carpet_level(k: int, cap: int = DEFAULT_CAP) -> CarpetApprox:
    """``SC_k``: the split square with all holes of levels 1..k cut out."""
    _guard(k, cap)
    return CarpetApprox(k, _carpet_family(SPLIT_SQUARE, k))


def sierpinski_level(k: int, cap: int = DEFAULT_CAP) -> CarpetApprox:
    """``C_k`` as a family of closed squares (open holes removed)."""
    _guard(k, cap)
    return CarpetApprox(k, _carpet_family(EUCLID_SQUARE, k))


# -- membership by digits ----------------------------------------------------------

def _streams(p: QuadPoint):
    sx, sy = p.sides
    # side 0 is approached from the left: twos-tail expansion
    tails = {0: "twos", 1: "zeros"}
    return ternary_stream(p.x, tails[sx]), ternary_stream(p.y, tails[sy])


def first_hole_level(p: QuadPoint) -> Optional[int]:
    """Level of the first hole containing ``p``, or None if ``p`` is in SC.

    That level is the first digit position where both side-aware ternary
    expansions read 1.  Both streams are periodic past their preperiods, so
    scanning one joint period beyond the longer preperiod is exhaustive.
    """
    xs, ys = _streams(p)
    bound = max(len(xs.preperiod), len(ys.preperiod)) + lcm(len(xs.period), len(ys.period))
    for k in range(1, bound + 1):
        if xs.digit(k) == 1 and ys.digit(k) == 1:
            return k
    return None


def sc_member(p: QuadPoint) -> bool:
    return first_hole_level(p) is None


def in_split_carpet_level(p: QuadPoint, k: int) -> bool:
    """Pointwise ``p in SC_k``: test ``p`` against the holes of levels 1..k.

    Only holes whose index is within one of ``floor(x * 3^(j-1))`` can contain
    ``p``; those few candidates are tested with the basic-set membership rule.
    """
    for j in range(1, k + 1):
        span = 3 ** (j - 1)
        lx = int(p.x * span)
        ly = int(p.y * span)
        for l in range(max(lx - 1, 0), min(lx + 2, span)):
            for m in range(max(ly - 1, 0), min(ly + 2, span)):
                if member_square(p, HoleIndex(j, l, m).square()):
                    return False
    return True


# -- hole oracles --------------------------------------------------------------------

def covering_hole(a, b, c, d) -> Optional[HoleIndex]:
    """The hole containing the open rectangle ``(a,b) x (c,d)``, if any."""
    a, b, c, d = (as_rational(v) for v in (a, b, c, d))
    if not (a < b and c < d):
        raise PreconditionError("need a < b and c < d")
    width = max(b - a, d - c)
    k = 1
    while Fraction(1, 3 ** k) >= width:
        n = 3 ** k
        # largest l with (3l+1)/n <= a, likewise m
        l = (a * n - 1) // 3
        m = (c * n - 1) // 3
        if 0 <= l < n // 3 and 0 <= m < n // 3:
            if b <= Fraction(3 * l + 2, n) and d <= Fraction(3 * m + 2, n):
                return HoleIndex(k, int(l), int(m))
        k += 1
    return None


def rect_meets_carpet(a, b, c, d) -> bool:
    """Whether the open rectangle ``(a,b) x (c,d)`` meets the Sierpinski carpet.

    A connected open set misses the carpet exactly when it sits inside a
    single hole, so the search is over holes at least as large as the
    rectangle.
    """
    return covering_hole(a, b, c, d) is None


@lru_cache(maxsize=None)
def _alive_cells(k: int):
    cells = _carpet_family(SPLIT_SQUARE, k).uniform_raster(k, 3)
    cells.flags.writeable = False
    return cells


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def holes_meeting(N: BasicSquare, k: int) -> List[BasicSquare]:
    """Level-k holes whose basic square intersects ``N``."""
    n = 3 ** k
    span = n // 3

    def index_range(lo, hi):
        # (3l+1)/n < hi and (3l+2)/n > lo
        first = max(0, int((lo * n - 2) // 3))
        last = min(span - 1, _ceil((hi * n - 1) / 3))
        return range(first, last + 1)

    return [H for l in index_range(N.a, N.b) for m in index_range(N.c, N.d)
            if intersect_squares(H := HoleIndex(k, l, m).square(), N) is not None]


def split_carpet_window(N: BasicSquare, k: int) -> Family:
    """``SC_k n N`` by set algebra: ``N`` minus every hole of level <= k meeting it.

    Local, so it reaches levels where the global ``SC_k`` would exceed the cap
    as long as ``N`` is a cell a few levels above ``k``.
    """
    cut = [H for j in range(1, k + 1) for H in holes_meeting(N, j)]
    return family_difference(canonicalize([N], space=SPLIT_SQUARE), canonicalize(cut, space=SPLIT_SQUARE))


def window_around(p: QuadPoint, level: int) -> BasicSquare:
    """The level-``level`` triadic cell containing ``p`` (side-aware)."""
    n = 3 ** level
    sx, sy = p.sides

    def index(v, side):
        fl, rem = divmod(v.numerator * n, v.denominator)
        return fl - 1 if side == 0 and rem == 0 else fl

    i, j = index(p.x, sx), index(p.y, sy)
    return BasicSquare(Fraction(i, n), Fraction(i + 1, n), Fraction(j, n), Fraction(j + 1, n))


def _alive_slice(B: BasicSquare, k: int):
    # level-k cell i meets (a, b) iff a*n - 1 < i < b*n
    n = 3 ** k
    return _alive_cells(k)[int(B.a * n):_ceil(B.b * n), int(B.c * n):_ceil(B.d * n)]


def meets_split_carpet_level(B: BasicSquare, k: int) -> bool:
    """``B n SC_k != {}`` decided on the level-k cells of ``SC_k``."""
    return bool(_alive_slice(B, k).any())


def q_meets_split_carpet(B: BasicSquare, depth: int = DEFAULT_DEPTH) -> bool:
    """Whether ``Q(a,b;c,d)`` meets the split carpet.

    Decided by the Euclidean hole search on ``(a,b) x (c,d)``, then checked
    against the split approximants ``SC_k`` for ``k <= depth``: a negative
    answer must be confirmed by some empty ``B n SC_k``, a positive one must
    keep every ``B n SC_k`` nonempty.
    """
    answer = rect_meets_carpet(B.a, B.b, B.c, B.d)
    hits = [meets_split_carpet_level(B, k) for k in range(depth + 1)]
    if answer and not all(hits):
        raise InconsistencyError(f"{B} meets C but misses SC_{hits.index(False)}")
    if not answer:
        hole = covering_hole(B.a, B.b, B.c, B.d)
        if hole.k <= depth and hits[hole.k]:
            raise InconsistencyError(f"{B} sits in hole {hole} yet meets SC_{hole.k}")
    return answer


def sc_witness(B: BasicSquare, depth: int = DEFAULT_DEPTH) -> Optional[QuadPoint]:
    """A point of ``B n SC`` certified by the digit criterion, if one is found.

    Candidates are lower-left corners of ``B`` clipped to alive level-``depth``
    cells, in the quadrant whose sides are both closed on the left.
    """
    n = 3 ** depth
    block = _alive_slice(B, depth)
    i0, j0 = int(B.a * n), int(B.c * n)
    for di, dj in zip(*block.nonzero()):
        x = max(B.a, Fraction(i0 + int(di), n))
        y = max(B.c, Fraction(j0 + int(dj), n))
        if x < ONE and y < ONE:
            p = QuadPoint(x, y, 4)
            if member_square(p, B) and sc_member(p):
                return p
    return None


def level_cells(m: int) -> List[BasicSquare]:
    n = 3 ** m
    return [BasicSquare(Fraction(i, n), Fraction(i + 1, n), Fraction(j, n), Fraction(j + 1, n))
            for i in range(n) for j in range(n)]


def surviving_cells(m: int, depth: int = DEFAULT_DEPTH, cap: int = DEFAULT_CAP) -> List[BasicSquare]:
    """Level-m triadic cells that meet the split carpet (there are ``8**m``)."""
    _guard(m, cap)
    return [B for B in level_cells(m) if q_meets_split_carpet(B, depth)]


def triadic_rectangles(level: int) -> List[Tuple[Fraction, Fraction, Fraction, Fraction]]:
    """All ``(a, b, c, d)`` with ``a < b``, ``c < d`` on the level grid."""
    n = 3 ** level
    ticks = [Fraction(i, n) for i in range(n + 1)]
    spans = [(ticks[i], ticks[j]) for i in range(n + 1) for j in range(i + 1, n + 1)]
    return [(a, b, c, d) for a, b in spans for c, d in spans]


def bottom_edge_points(denominator: int) -> List[QuadPoint]:
    """Sample of ``[0,1] x {0} x {3,4}``, the split-interval copy inside SC."""
    out = []
    for i in range(1, denominator):
        x = Fraction(i, denominator)
        out.extend([QuadPoint(x, ZERO, 3), QuadPoint(x, ZERO, 4)])
    return out
