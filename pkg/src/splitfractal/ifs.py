"""Iterated function systems and their Hutchinson operator.

Maps act as ``g x id`` on the split interval and ``g1 x g2 x id`` on the split
square: the side / quadrant tag is never touched.  The Hutchinson operator is
available on finite point clouds and on families of basic sets; both are
exact.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import FrozenSet, Iterable, Optional, Tuple, Union

from .algebra import (
    EUCLID_INTERVAL,
    EUCLID_SQUARE,
    SPLIT_INTERVAL,
    SPLIT_SQUARE,
    Family,
    canonicalize,
    dimension,
)
from .errors import PreconditionError, ResourceLimitError, SpaceMismatchError
from .exact import AffineMap
from .spaces import (
    QuadPoint,
    SplitPoint,
    homeo_h,
    homeo_h_inv,
    image_interval,
    image_square,
)

DEFAULT_CAP = 10 ** 6

Point = Union[SplitPoint, QuadPoint, Fraction, Tuple[Fraction, Fraction]]


@dataclass(frozen=True)
class IfsMap:
    gx: AffineMap
    gy: Optional[AffineMap] = None
    space: str = SPLIT_SQUARE

    def __post_init__(self):
        if (dimension(self.space) == 2) != (self.gy is not None):
            raise PreconditionError(f"{self.space} maps need exactly {dimension(self.space)} coordinate maps")

    def __call__(self, p: Point) -> Point:
        # increasing maps of [0, 1] into itself keep x < 1 and x > 0 where
        # they held, so images of valid points need no re-validation
        gx, gy = self.gx, self.gy
        if self.space == SPLIT_SQUARE:
            return QuadPoint._trusted(gx(p.x), gy(p.y), p.t)
        if self.space == SPLIT_INTERVAL:
            return SplitPoint._trusted(gx(p.x), p.side)
        if self.space == EUCLID_INTERVAL:
            return gx(p)
        return gx(p[0]), gy(p[1])

    def image(self, piece):
        if self.gy is None:
            return image_interval(self.gx, piece)
        return image_square(self.gx, self.gy, piece)


@dataclass(frozen=True)
class Ifs:
    maps: Tuple[IfsMap, ...]
    name: str = "custom"
    attractor: Optional[str] = None

    def __post_init__(self):
        maps = tuple(self.maps)
        if not maps:
            raise PreconditionError("an IFS needs at least one map")
        if len({m.space for m in maps}) != 1:
            raise SpaceMismatchError("all maps of an IFS must act on one space")
        object.__setattr__(self, "maps", maps)

    @property
    def space(self) -> str:
        return self.maps[0].space

    def __len__(self):
        return len(self.maps)


@dataclass(frozen=True)
class PointCloud:
    space: str
    points: FrozenSet[Point] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "points", frozenset(self.points))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.sorted())

    def sorted(self):
        return sorted(self.points)


def cloud(space: str, points: Iterable[Point]) -> PointCloud:
    return PointCloud(space, frozenset(points))


# -- built-in systems ---------------------------------------------------------------

def _halving(space: str) -> Tuple[IfsMap, ...]:
    return tuple(IfsMap(AffineMap.ifs_branch(i, 2), None, space) for i in (0, 1))


def _quartering(space: str) -> Tuple[IfsMap, ...]:
    return tuple(
        IfsMap(AffineMap.ifs_branch(i, 2), AffineMap.ifs_branch(j, 2), space)
        for i, j in product((0, 1), repeat=2)
    )


CARPET_INDICES = tuple((i, j) for i, j in product(range(3), repeat=2) if (i, j) != (1, 1))


def _carpet(space: str) -> Tuple[IfsMap, ...]:
    return tuple(
        IfsMap(AffineMap.ifs_branch(i, 3), AffineMap.ifs_branch(j, 3), space)
        for i, j in CARPET_INDICES
    )


_BUILTINS = {
    "interval_halving_split": (lambda: _halving(SPLIT_INTERVAL), "split_interval"),
    "interval_halving_euclid": (lambda: _halving(EUCLID_INTERVAL), "euclid_interval"),
    "square_quartering_split": (lambda: _quartering(SPLIT_SQUARE), "split_square"),
    "square_quartering_euclid": (lambda: _quartering(EUCLID_SQUARE), "euclid_square"),
    "carpet_split": (lambda: _carpet(SPLIT_SQUARE), "split_carpet"),
    "carpet_euclid": (lambda: _carpet(EUCLID_SQUARE), "sierpinski_carpet"),
}
BUILTIN_NAMES = tuple(_BUILTINS)


def builtin(name: str) -> Ifs:
    """One of the named systems; ``-`` and ``_`` are interchangeable in names."""
    key = name.replace("-", "_")
    if key not in _BUILTINS:
        raise PreconditionError(f"unknown IFS {name!r}; choose from {', '.join(BUILTIN_NAMES)}")
    make, attractor = _BUILTINS[key]
    return Ifs(make(), key, attractor)


# -- Hutchinson operator -------------------------------------------------------------

def _check_space(F: Ifs, space: str):
    if F.space != space:
        raise SpaceMismatchError(f"IFS acts on {F.space}, operand lives in {space}")


def hutchinson_points(F: Ifs, K: PointCloud) -> PointCloud:
    _check_space(F, K.space)
    return PointCloud(K.space, frozenset(f(p) for f in F.maps for p in K.points))


def hutchinson_family(F: Ifs, A: Family) -> Family:
    _check_space(F, A.space)
    if not A.pieces:
        raise PreconditionError("hyperspace elements are nonempty; got the empty family")
    return canonicalize((f.image(p) for f in F.maps for p in A.pieces), space=A.space)


def iterate(F: Ifs, K, n: int, cap: int = DEFAULT_CAP):
    """``F^n(K)`` for a point cloud or a family; ``n = 0`` returns ``K``."""
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    step = hutchinson_points if isinstance(K, PointCloud) else hutchinson_family
    what = "points" if isinstance(K, PointCloud) else "pieces"
    for _ in range(n):
        projected = len(K) * len(F)
        if projected > cap:
            raise ResourceLimitError(projected, cap, what)
        K = step(F, K)
    return K


def orbit(F: Ifs, K, n: int, cap: int = DEFAULT_CAP):
    """``[K, F(K), ..., F^n(K)]``."""
    out = [K]
    for _ in range(n):
        out.append(iterate(F, out[-1], 1, cap))
    return out


# -- products ------------------------------------------------------------------------

_PRODUCT_SPACE = {SPLIT_INTERVAL: SPLIT_SQUARE, EUCLID_INTERVAL: EUCLID_SQUARE}
_PRODUCT_ATTRACTOR = {
    ("split_interval", "split_interval"): "split_square",
    ("euclid_interval", "euclid_interval"): "euclid_square",
}


def product_ifs(F1: Ifs, F2: Ifs) -> Ifs:
    """``F1 x F2``: every pair of maps acting coordinatewise.

    On split spaces the product is transported to the split square through
    the homeomorphism ``h``; this is the map ``g1 x g2 x id``.
    """
    if F1.space != F2.space or F1.space not in _PRODUCT_SPACE:
        raise SpaceMismatchError("product needs two interval systems of the same flavour")
    space = _PRODUCT_SPACE[F1.space]
    maps = tuple(IfsMap(f1.gx, f2.gx, space) for f1 in F1.maps for f2 in F2.maps)
    attractor = _PRODUCT_ATTRACTOR.get((F1.attractor, F2.attractor))
    return Ifs(maps, f"{F1.name}*{F2.name}", attractor)


def product_point(p1, p2):
    if isinstance(p1, SplitPoint):
        return homeo_h_inv(p1, p2)
    return (p1, p2)


def product_cloud(K1: PointCloud, K2: PointCloud) -> PointCloud:
    if K1.space != K2.space or K1.space not in _PRODUCT_SPACE:
        raise SpaceMismatchError("product needs two interval clouds of the same flavour")
    return PointCloud(_PRODUCT_SPACE[K1.space],
                      frozenset(product_point(p, q) for p in K1.points for q in K2.points))


def project_cloud(K: PointCloud, axis: int) -> PointCloud:
    """Coordinate projection ``pi_axis``; split-square points go through ``h``."""
    if K.space == SPLIT_SQUARE:
        return PointCloud(SPLIT_INTERVAL, frozenset(homeo_h(p)[axis] for p in K.points))
    if K.space == EUCLID_SQUARE:
        return PointCloud(EUCLID_INTERVAL, frozenset(p[axis] for p in K.points))
    raise SpaceMismatchError("projection needs a square cloud")
