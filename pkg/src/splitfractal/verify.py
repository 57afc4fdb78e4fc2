"""Finite-horizon certificates for attractor convergence and topology witnesses.

Lower Vietoris convergence is tested on a finite grid of basic cells meeting
the attractor: from some ``n0`` on, every cell must contain a point of
``F^n(seed)``.  Upper convergence is tested against a fixed approximant: from
level ``m`` on, ``F^n(seed)`` must stay inside it.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import (
    EUCLID_INTERVAL,
    EUCLID_SQUARE,
    SPLIT_INTERVAL,
    SPLIT_SQUARE,
    Family,
    family_equals,
    family_member,
    family_subset,
)
from .carpet import level_cells, rect_meets_carpet, sierpinski_level, split_carpet_level, surviving_cells
from .errors import PreconditionError, ResourceLimitError
from .exact import ONE, as_rational
from .ifs import DEFAULT_CAP, Ifs, PointCloud, hutchinson_family, iterate
from .spaces import (
    QUADRANT_SIDES,
    BasicInterval,
    BasicSquare,
    QuadPoint,
    SplitPoint,
    intersect_squares,
    member_interval,
    member_square,
    quadrant_feasible,
    separate,
    side_feasible,
)

CERTIFIED, FAILED, UNDECIDED = "certified", "failed", "undecided"

ATTRACTOR_SPACE = {
    "split_interval": SPLIT_INTERVAL,
    "split_square": SPLIT_SQUARE,
    "split_carpet": SPLIT_SQUARE,
    "euclid_interval": EUCLID_INTERVAL,
    "euclid_square": EUCLID_SQUARE,
    "sierpinski_carpet": EUCLID_SQUARE,
}
# carpets are tested on triadic cells, the full spaces on dyadic ones
GRID_BASE = {
    "split_interval": 2, "split_square": 2, "split_carpet": 3,
    "euclid_interval": 2, "euclid_square": 2, "sierpinski_carpet": 3,
}


@dataclass
class ConvergenceReport:
    system: str
    seeds: Tuple
    grid_level: int
    horizon: int
    n0: Optional[int]
    per_cell_first_hit: Dict = field(default_factory=dict)
    verdict: str = UNDECIDED
    upper_ok: Optional[bool] = None
    fixed_point_ok: Optional[bool] = None

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED


def _resolve_attractor(F: Ifs, attractor: Optional[str]) -> str:
    attractor = attractor or F.attractor
    if attractor not in ATTRACTOR_SPACE:
        raise PreconditionError(f"unknown attractor {attractor!r}")
    if ATTRACTOR_SPACE[attractor] != F.space:
        raise PreconditionError(f"attractor {attractor} does not live in {F.space}")
    return attractor


def _uniform_intervals(n: int) -> List[BasicInterval]:
    return [BasicInterval(Fraction(i, n), Fraction(i + 1, n)) for i in range(n)]


def grid_cells(attractor: str, m: int) -> List:
    """Level-m grid cells meeting the attractor, in canonical (sorted) order."""
    base = GRID_BASE[attractor]
    n = base ** m
    if attractor in ("split_interval", "euclid_interval"):
        return _uniform_intervals(n)
    if attractor == "split_carpet":
        return sorted(surviving_cells(m))
    if attractor == "sierpinski_carpet":
        return sorted(B for B in level_cells(m) if rect_meets_carpet(*B.endpoints))
    return sorted(BasicSquare(Fraction(i, n), Fraction(i + 1, n), Fraction(j, n), Fraction(j + 1, n))
                  for i in range(n) for j in range(n))


def _split_index(x: Fraction, side: int, n: int) -> int:
    fl, rem = divmod(x.numerator * n, x.denominator)
    if side == 0 and rem == 0:
        return fl - 1
    return fl


def _open_index(x: Fraction, n: int) -> Optional[int]:
    fl, rem = divmod(x.numerator * n, x.denominator)
    return None if rem == 0 else fl


def cell_index(point, space: str, n: int):
    """Index of the uniform ``1/n`` cell containing ``point``.

    Split cells partition their space.  Euclidean points are assigned to the
    open cell around them, or None when they sit on a grid line.
    """
    if space == SPLIT_INTERVAL:
        return (_split_index(point.x, point.side, n),)
    if space == SPLIT_SQUARE:
        sx, sy = QUADRANT_SIDES[point.t]
        return _split_index(point.x, sx, n), _split_index(point.y, sy, n)
    if space == EUCLID_INTERVAL:
        i = _open_index(point, n)
        return None if i is None else (i,)
    i, j = _open_index(point[0], n), _open_index(point[1], n)
    return None if i is None or j is None else (i, j)


def _index_of_cell(cell, n: int):
    if isinstance(cell, BasicInterval):
        return (int(cell.a * n),)
    return int(cell.a * n), int(cell.c * n)


def _hit_sets(orbit_clouds: Sequence[PointCloud], n: int) -> List[set]:
    return [{cell_index(p, K.space, n) for p in K.points} for K in orbit_clouds]


def _orbit(F: Ifs, seed: PointCloud, N: int, cap: int) -> List[PointCloud]:
    clouds = [seed]
    for _ in range(N):
        clouds.append(iterate(F, clouds[-1], 1, cap))
    return clouds


def _lower_from_orbit(cells, clouds, base, m):
    n = base ** m
    wanted = [_index_of_cell(c, n) for c in cells]
    hits = _hit_sets(clouds, n)
    N = len(clouds) - 1
    first = {}
    for cell, idx in zip(cells, wanted):
        k = N
        while k >= 0 and idx in hits[k]:
            k -= 1
        first[cell] = k + 1 if k < N else None
    all_hit = [all(idx in h for idx in wanted) for h in hits]
    if True not in all_hit:
        return None, first, UNDECIDED
    n_all = all_hit.index(True)
    if all(all_hit[n_all:]):
        return n_all, first, CERTIFIED
    return None, first, FAILED


def lower_vietoris_check(F: Ifs, seed: PointCloud, attractor: Optional[str] = None,
                         m: int = 1, N: int = 4, cap: int = DEFAULT_CAP) -> ConvergenceReport:
    """Least ``n0 <= N`` after which every level-m test cell meets ``F^n(seed)``.

    Verdict is ``undecided`` when no such ``n0`` exists within the horizon and
    ``failed`` when all cells are hit at some step but a cell is missed later.
    """
    attractor = _resolve_attractor(F, attractor)
    if not seed.points:
        raise PreconditionError("seed must be nonempty")
    cells = grid_cells(attractor, m)
    clouds = _orbit(F, seed, N, cap)
    n0, first, verdict = _lower_from_orbit(cells, clouds, GRID_BASE[attractor], m)
    return ConvergenceReport(F.name, tuple(seed.sorted()), m, N, n0, first, verdict)


def attractor_approximant(attractor: str, m: int, cap: int = DEFAULT_CAP) -> Family:
    if attractor == "split_carpet":
        return split_carpet_level(m, cap).cells
    if attractor == "sierpinski_carpet":
        return sierpinski_level(m, cap).cells
    return Family.full(ATTRACTOR_SPACE[attractor])


def _cloud_inside(K: PointCloud, A: Family, attractor: str, m: int) -> bool:
    if K.space in (SPLIT_INTERVAL, SPLIT_SQUARE):
        alive = A.uniform_raster(m, GRID_BASE[attractor])
        n = GRID_BASE[attractor] ** m
        return all(alive[cell_index(p, K.space, n)] for p in K.points)
    return all(family_member(p, A) for p in K.points)


def _upper_from_orbit(orbit, attractor, m, cap) -> bool:
    A = attractor_approximant(attractor, m, cap)
    for n, K in enumerate(orbit):
        if n < m:
            continue
        if isinstance(K, PointCloud):
            if not _cloud_inside(K, A, attractor, m):
                return False
        elif not family_subset(K, A):
            return False
    return True


def upper_vietoris_check(F: Ifs, seed, m: int = 1, N: int = 4,
                         attractor: Optional[str] = None, cap: int = DEFAULT_CAP) -> bool:
    """Whether ``F^n(seed)`` lies in the level-m approximant for ``m <= n <= N``."""
    attractor = _resolve_attractor(F, attractor)
    orbit = [seed]
    for _ in range(N):
        orbit.append(iterate(F, orbit[-1], 1, cap))
    return _upper_from_orbit(orbit, attractor, m, cap)


def fixed_point_check(F: Ifs, attractor: Optional[str] = None, m: int = 1,
                      cap: int = DEFAULT_CAP) -> bool:
    """``F(A_m) = A_{m+1}`` for the level-m approximant (``F(A) = A`` for full spaces)."""
    attractor = _resolve_attractor(F, attractor)
    image = hutchinson_family(F, attractor_approximant(attractor, m, cap))
    return family_equals(image, attractor_approximant(attractor, m + 1, cap))


def default_seeds(space: str, denominator: int = 5) -> List:
    """Deterministic full-basin sample: a uniform grid with every feasible tag.

    Grid coordinates 0 and 1 supply the boundary cases, where only some
    sides/quadrants exist.
    """
    ticks = [Fraction(i, denominator) for i in range(denominator + 1)]
    if space == SPLIT_INTERVAL:
        return [SplitPoint(x, s) for x in ticks for s in (0, 1) if side_feasible(x, s)]
    if space == SPLIT_SQUARE:
        return [QuadPoint(x, y, t) for x, y in product(ticks, ticks) for t in QUADRANT_SIDES
                if quadrant_feasible(x, y, t)]
    if space == EUCLID_INTERVAL:
        return list(ticks)
    return [(x, y) for x, y in product(ticks, ticks)]


def attractor_certificate(F: Ifs, seeds: Optional[Sequence] = None, m: int = 1, N: int = 4,
                          attractor: Optional[str] = None, cap: int = DEFAULT_CAP) -> ConvergenceReport:
    """Lower and upper checks for every seed plus the fixed-point check.

    Each seed is run as a singleton cloud; by monotonicity of the Hutchinson
    operator any compact containing a seed converges at least as fast.
    """
    attractor = _resolve_attractor(F, attractor)
    seeds = list(default_seeds(F.space) if seeds is None else seeds)
    if not seeds:
        raise PreconditionError("need at least one seed")
    cells = grid_cells(attractor, m)
    base = GRID_BASE[attractor]
    verdicts, n0s = [], []
    upper_ok = True
    first_all: Dict = {c: 0 for c in cells}
    for s in seeds:
        orbit = _orbit(F, PointCloud(F.space, frozenset([s])), N, cap)
        n0, first, verdict = _lower_from_orbit(cells, orbit, base, m)
        verdicts.append(verdict)
        n0s.append(n0)
        for c in cells:
            if first_all[c] is not None:
                first_all[c] = None if first[c] is None else max(first_all[c], first[c])
        upper_ok = upper_ok and _upper_from_orbit(orbit, attractor, m, cap)
    fixed_ok = fixed_point_check(F, attractor, m, cap)
    if FAILED in verdicts or not upper_ok or not fixed_ok:
        verdict = FAILED
    elif UNDECIDED in verdicts:
        verdict = UNDECIDED
    else:
        verdict = CERTIFIED
    n0 = max(n0s) if verdict == CERTIFIED else None
    return ConvergenceReport(F.name, tuple(seeds), m, N, n0, first_all, verdict, upper_ok, fixed_ok)


# -- topology witnesses ---------------------------------------------------------------

def convergence_semantics_witness(x, side: int, m: int = 3, N: int = 200) -> bool:
    """Finite witness that side tags encode one-sided limits.

    The sequence ``x - x/(2n)`` (side 0) or ``x + (1-x)/(2n)`` (side 1), with
    either tag, eventually enters every basic neighbourhood of ``(x, side)``
    built on the level-m triadic grid refined by ``x``, and eventually leaves
    some neighbourhood of the opposite point ``(x, 1 - side)``.
    """
    x = as_rational(x)
    p = SplitPoint(x, side)   # raises on infeasible sides
    n_grid = 3 ** m
    grid = sorted({Fraction(k, n_grid) for k in range(n_grid + 1)} | {x})
    nbhds = [BasicInterval(a, b) for i, a in enumerate(grid) for b in grid[i + 1:]]
    if side == 0:
        seq = [x - x / (2 * n) for n in range(1, N + 1)]
    else:
        seq = [x + (ONE - x) / (2 * n) for n in range(1, N + 1)]

    for tag in (0, 1):
        points = [SplitPoint(v, tag) for v in seq]
        for V in nbhds:
            if member_interval(p, V) and _tail_start(points, V, True) is None:
                return False
        if side_feasible(x, 1 - side):
            q = p.opposite
            if not any(member_interval(q, V) and _tail_start(points, V, False) is not None
                       for V in nbhds):
                return False
    return True


def _tail_start(points, V, inside: bool) -> Optional[int]:
    """Least ``n0`` with every later point inside (or outside) ``V``."""
    k = len(points)
    while k > 0 and member_interval(points[k - 1], V) == inside:
        k -= 1
    return k if k < len(points) else None


def separability_witness(m: int, cap: int = DEFAULT_CAP) -> bool:
    """Every quadrant piece of every level-m cell meets ``{(p/3^(m+1), q/3^(m+1), t)}``."""
    if 4 * 9 ** m > cap:
        raise ResourceLimitError(4 * 9 ** m, cap, "cells")
    n = 3 ** m
    fine = 3 * n
    for B in level_cells(m):
        i, j = int(B.a * n), int(B.c * n)
        for t in QUADRANT_SIDES:
            if not any(quadrant_feasible(x, y, t) and member_square(QuadPoint(x, y, t), B)
                       for x, y in product((Fraction(p, fine) for p in range(3 * i, 3 * i + 4)),
                                           [Fraction(q, fine) for q in range(3 * j, 3 * j + 4)])):
                return False
    return True


def hausdorff_witness(p: QuadPoint, q: QuadPoint) -> bool:
    """Run :func:`separate` and check its output independently."""
    U, V = separate(p, q)
    return member_square(p, U) and member_square(q, V) and intersect_squares(U, V) is None
