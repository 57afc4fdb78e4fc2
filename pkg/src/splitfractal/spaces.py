"""Points and clopen basic sets of the split interval and the split square.

Side convention, fixed everywhere in the package: side 0 is the copy of ``x``
approached from the left, so it lives in right-closed cells ``(a, b]``; side 1
is approached from the right and lives in left-closed cells ``[a, b)``.

The split interval is then the lexicographically ordered set of pairs
``(x, side)`` with ``(x, 0) < (x, 1)``, and ``I(a, b)`` is the order interval
``[(a, 1), (b, 0)]``.

A point of the split square carries a quadrant tag ``t`` in 1..4.  The tag
fixes the side of each coordinate::

    t=1: [a,b) x (c,d]     sides (1, 0)
    t=2: (a,b] x (c,d]     sides (0, 0)
    t=3: (a,b] x [c,d)     sides (0, 1)
    t=4: [a,b) x [c,d)     sides (1, 1)
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import PreconditionError
from .exact import ONE, ZERO, AffineMap, as_rational, simplest_between

QUADRANT_SIDES = {1: (1, 0), 2: (0, 0), 3: (0, 1), 4: (1, 1)}
SIDES_QUADRANT = {v: k for k, v in QUADRANT_SIDES.items()}


def side_feasible(x: Fraction, side: int) -> bool:
    """Whether ``(x, side)`` is a point of the split interval."""
    if side == 0:
        return ZERO < x <= ONE
    if side == 1:
        return ZERO <= x < ONE
    return False


@dataclass(frozen=True, order=True)
class SplitPoint:
    x: Fraction
    side: int

    def __post_init__(self):
        x = as_rational(self.x)
        object.__setattr__(self, "x", x)
        if self.side not in (0, 1):
            raise PreconditionError(f"side must be 0 or 1, got {self.side!r}")
        if not side_feasible(x, self.side):
            raise PreconditionError(f"({x}, {self.side}) is not a point of the split interval")

    @classmethod
    def _trusted(cls, x: Fraction, side: int) -> "SplitPoint":
        obj = object.__new__(cls)
        object.__setattr__(obj, "x", x)
        object.__setattr__(obj, "side", side)
        return obj

    @property
    def opposite(self) -> "SplitPoint":
        return SplitPoint(self.x, 1 - self.side)


@dataclass(frozen=True, order=True)
class QuadPoint:
    x: Fraction
    y: Fraction
    t: int

    def __post_init__(self):
        x, y = as_rational(self.x), as_rational(self.y)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        if self.t not in QUADRANT_SIDES:
            raise PreconditionError(f"quadrant tag must be 1..4, got {self.t!r}")
        sx, sy = QUADRANT_SIDES[self.t]
        if not (side_feasible(x, sx) and side_feasible(y, sy)):
            raise PreconditionError(f"({x}, {y}, {self.t}) is not a point of the split square")

    @classmethod
    def _trusted(cls, x: Fraction, y: Fraction, t: int) -> "QuadPoint":
        obj = object.__new__(cls)
        object.__setattr__(obj, "x", x)
        object.__setattr__(obj, "y", y)
        object.__setattr__(obj, "t", t)
        return obj

    @property
    def sides(self) -> Tuple[int, int]:
        return QUADRANT_SIDES[self.t]


def quadrant_feasible(x: Fraction, y: Fraction, t: int) -> bool:
    sx, sy = QUADRANT_SIDES[t]
    return side_feasible(x, sx) and side_feasible(y, sy)


@dataclass(frozen=True, order=True)
class BasicInterval:
    """``I(a, b) = (a, b] x {0}  u  [a, b) x {1}`` with ``0 <= a < b <= 1``.

    On the Euclidean interval the same endpoints denote the closed ``[a, b]``.
    """

    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = as_rational(self.a), as_rational(self.b)
        if not ZERO <= a < b <= ONE:
            raise PreconditionError(f"need 0 <= a < b <= 1, got a={a}, b={b}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def _trusted(cls, a: Fraction, b: Fraction) -> "BasicInterval":
        # for endpoints produced by the package itself; skips validation
        obj = object.__new__(cls)
        object.__setattr__(obj, "a", a)
        object.__setattr__(obj, "b", b)
        return obj

    @property
    def endpoints(self) -> Tuple[Fraction, Fraction]:
        return self.a, self.b

    def __str__(self):
        return f"I({self.a},{self.b})"


@dataclass(frozen=True, order=True)
class BasicSquare:
    """The basic clopen set ``Q(a, b; c, d)`` of the split square.

    On the Euclidean square the same endpoints denote ``[a, b] x [c, d]``.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        a, b, c, d = (as_rational(v) for v in (self.a, self.b, self.c, self.d))
        if not (ZERO <= a < b <= ONE and ZERO <= c < d <= ONE):
            raise PreconditionError(f"need a < b and c < d in [0, 1], got {a}, {b}; {c}, {d}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @classmethod
    def _trusted(cls, a, b, c, d) -> "BasicSquare":
        obj = object.__new__(cls)
        for name, v in zip("abcd", (a, b, c, d)):
            object.__setattr__(obj, name, v)
        return obj

    @property
    def endpoints(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.a, self.b, self.c, self.d

    def __str__(self):
        return f"Q({self.a},{self.b};{self.c},{self.d})"

    @property
    def x_interval(self) -> BasicInterval:
        return BasicInterval(self.a, self.b)

    @property
    def y_interval(self) -> BasicInterval:
        return BasicInterval(self.c, self.d)


FULL_INTERVAL = BasicInterval(ZERO, ONE)
FULL_SQUARE = BasicSquare(ZERO, ONE, ZERO, ONE)


def make_interval(a, b) -> Optional[BasicInterval]:
    """``I(a, b)``, or None when the interval is degenerate (``a >= b``)."""
    a, b = as_rational(a), as_rational(b)
    return BasicInterval(a, b) if a < b else None


def make_square(a, b, c, d) -> Optional[BasicSquare]:
    """``Q(a, b; c, d)``, or None when ``a >= b`` or ``c >= d``."""
    a, b, c, d = (as_rational(v) for v in (a, b, c, d))
    if a < b and c < d:
        return BasicSquare(a, b, c, d)
    return None


# -- membership ---------------------------------------------------------------

def in_side_interval(x: Fraction, side: int, a: Fraction, b: Fraction) -> bool:
    if side == 0:
        return a < x <= b
    return a <= x < b


def member_interval(p: SplitPoint, B: BasicInterval) -> bool:
    return in_side_interval(p.x, p.side, B.a, B.b)


def member_square(p: QuadPoint, B: BasicSquare) -> bool:
    sx, sy = QUADRANT_SIDES[p.t]
    return in_side_interval(p.x, sx, B.a, B.b) and in_side_interval(p.y, sy, B.c, B.d)


def half_open_member(p: SplitPoint, variant: str, a, b) -> bool:
    """Membership in the alternative basis sets ``I0(a, b)`` / ``I1(a, b)``.

    ``I0(a, b) = (a, b] x {0}  u  (a, b) x {1}``,
    ``I1(a, b) = (a, b) x {0}  u  [a, b) x {1}``.
    """
    a, b = as_rational(a), as_rational(b)
    if not a < b:
        raise PreconditionError("need a < b")
    x = p.x
    if variant == "I0":
        return a < x <= b if p.side == 0 else a < x < b
    if variant == "I1":
        return a < x < b if p.side == 0 else a <= x < b
    raise PreconditionError(f"unknown variant {variant!r}")


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def _floor(q: Fraction) -> int:
    return q.numerator // q.denominator


def base_equivalence_witness(p: SplitPoint, variant: str, a, b) -> int:
    """Least ``n >= 1`` such that ``p`` lies in the n-th term of the union.

    ``I0(a, b)`` is the union of ``I(a + (b-a)/n, b)`` and ``I1(a, b)`` the
    union of ``I(a, b - (b-a)/n)``.  The n = 1 terms are empty.
    """
    a, b = as_rational(a), as_rational(b)
    if not half_open_member(p, variant, a, b):
        raise PreconditionError(f"{p} is not in {variant}({a}, {b})")
    w = b - a
    if variant == "I0":
        # side 0 needs a + w/n < x, side 1 needs a + w/n <= x
        ratio = w / (p.x - a)
        return _floor(ratio) + 1 if p.side == 0 else _ceil(ratio)
    # side 0 needs x <= b - w/n, side 1 needs x < b - w/n
    ratio = w / (b - p.x)
    return _ceil(ratio) if p.side == 0 else _floor(ratio) + 1


# -- basis algebra ------------------------------------------------------------

def intersect_intervals(B1: BasicInterval, B2: BasicInterval) -> Optional[BasicInterval]:
    return make_interval(max(B1.a, B2.a), min(B1.b, B2.b))


def intersect_squares(B1: BasicSquare, B2: BasicSquare) -> Optional[BasicSquare]:
    return make_square(max(B1.a, B2.a), min(B1.b, B2.b), max(B1.c, B2.c), min(B1.d, B2.d))


def complement_interval(B: BasicInterval) -> Tuple[BasicInterval, ...]:
    pieces = (make_interval(ZERO, B.a), make_interval(B.b, ONE))
    return tuple(p for p in pieces if p is not None)


def complement_square(B: BasicSquare) -> Tuple[BasicSquare, ...]:
    """The four-piece clopen complement ``Q \\ Q(a, b; c, d)``.

    Returns ``Q(0,1;0,c), Q(0,1;d,1), Q(0,a;0,1), Q(b,1;0,1)`` minus the
    degenerate ones.  The pieces are disjoint from ``B`` and cover the rest of
    the square, but the side strips overlap the bottom/top strips at corners.
    """
    a, b, c, d = B.endpoints
    pieces = (
        make_square(ZERO, ONE, ZERO, c),
        make_square(ZERO, ONE, d, ONE),
        make_square(ZERO, a, ZERO, ONE),
        make_square(b, ONE, ZERO, ONE),
    )
    return tuple(p for p in pieces if p is not None)


# -- the homeomorphism onto the product of two split intervals -----------------

def homeo_h(p: QuadPoint) -> Tuple[SplitPoint, SplitPoint]:
    sx, sy = QUADRANT_SIDES[p.t]
    return SplitPoint(p.x, sx), SplitPoint(p.y, sy)


def homeo_h_inv(px: SplitPoint, py: SplitPoint) -> QuadPoint:
    return QuadPoint(px.x, py.x, SIDES_QUADRANT[(px.side, py.side)])


# -- maps acting on basic sets ------------------------------------------------

def _clip(v: Fraction) -> Fraction:
    return min(max(v, ZERO), ONE)


def preimage_interval(g: AffineMap, B: BasicInterval) -> Optional[BasicInterval]:
    """``(g x id)^-1 I(a, b)``, endpoints pulled back and clipped to [0, 1]."""
    return make_interval(_clip(g.raw_inverse(B.a)), _clip(g.raw_inverse(B.b)))


def preimage_square(g1: AffineMap, g2: AffineMap, B: BasicSquare) -> Optional[BasicSquare]:
    """``(g1 x g2 x id)^-1 Q(a, b; c, d)`` as a basic square, or None if empty."""
    return make_square(
        _clip(g1.raw_inverse(B.a)), _clip(g1.raw_inverse(B.b)),
        _clip(g2.raw_inverse(B.c)), _clip(g2.raw_inverse(B.d)),
    )


def image_interval(g: AffineMap, B: BasicInterval) -> BasicInterval:
    return BasicInterval(g(B.a), g(B.b))


def image_square(g1: AffineMap, g2: AffineMap, B: BasicSquare) -> BasicSquare:
    return BasicSquare(g1(B.a), g1(B.b), g2(B.c), g2(B.d))


# -- Hausdorff separation -------------------------------------------------------

def _split_cut(p: SplitPoint, q: SplitPoint) -> Fraction:
    """Cut value ``c`` with ``p`` in I(0, c) and ``q`` in I(c, 1); needs p < q."""
    candidates = []
    if p.x < q.x:
        candidates.append(simplest_between(p.x, q.x))
    if p.side == 0:
        candidates.append(p.x)
    if q.side == 1:
        candidates.append(q.x)
    # candidates are all valid; p.x > 0 on side 0 and q.x < 1 on side 1
    return min(candidates, key=lambda c: (c.denominator, c))


def separate_split(p: SplitPoint, q: SplitPoint) -> Tuple[BasicInterval, BasicInterval]:
    if p == q:
        raise PreconditionError("cannot separate a point from itself")
    if q < p:
        second, first = separate_split(q, p)
        return first, second
    c = _split_cut(p, q)
    return BasicInterval(ZERO, c), BasicInterval(c, ONE)


def separate(p: QuadPoint, q: QuadPoint) -> Tuple[BasicSquare, BasicSquare]:
    """Disjoint basic squares with ``p`` in the first and ``q`` in the second."""
    if p == q:
        raise PreconditionError("cannot separate a point from itself")
    (px, py), (qx, qy) = homeo_h(p), homeo_h(q)
    options = []
    if px != qx:
        U, V = separate_split(px, qx)
        options.append((max(U.b.denominator, V.a.denominator), 0,
                        (BasicSquare(U.a, U.b, ZERO, ONE), BasicSquare(V.a, V.b, ZERO, ONE))))
    if py != qy:
        U, V = separate_split(py, qy)
        options.append((max(U.b.denominator, V.a.denominator), 1,
                        (BasicSquare(ZERO, ONE, U.a, U.b), BasicSquare(ZERO, ONE, V.a, V.b))))
    return min(options, key=lambda o: o[:2])[2]
