"""Strategies and direct-definition oracles shared by the test modules."""
from fractions import Fraction
from itertools import combinations

from hypothesis import strategies as st

from splitfractal.spaces import QuadPoint, SplitPoint, quadrant_feasible, side_feasible

# end styles of the four quadrant pieces, written out by hand:
# t=1 [a,b)x(c,d]   t=2 (a,b]x(c,d]   t=3 (a,b]x[c,d)   t=4 [a,b)x[c,d)
LEFT_CLOSED_X = {1: True, 2: False, 3: False, 4: True}
BOTTOM_CLOSED_Y = {1: False, 2: False, 3: True, 4: True}


def in_half_open(v, lo, hi, left_closed):
    return lo <= v < hi if left_closed else lo < v <= hi


def oracle_interval(p: SplitPoint, a, b) -> bool:
    return in_half_open(p.x, a, b, p.side == 1)


def oracle_square(p: QuadPoint, a, b, c, d) -> bool:
    return (in_half_open(p.x, a, b, LEFT_CLOSED_X[p.t])
            and in_half_open(p.y, c, d, BOTTOM_CLOSED_Y[p.t]))


def ticks(den):
    return [Fraction(i, den) for i in range(den + 1)]


def spans(den):
    return list(combinations(ticks(den), 2))


def split_grid(den):
    return [SplitPoint(x, s) for x in ticks(den) for s in (0, 1) if side_feasible(x, s)]


def quad_grid(den):
    return [QuadPoint(x, y, t) for x in ticks(den) for y in ticks(den) for t in (1, 2, 3, 4)
            if quadrant_feasible(x, y, t)]


@st.composite
def unit_rationals(draw, max_den=60):
    den = draw(st.integers(1, max_den))
    return Fraction(draw(st.integers(0, den)), den)


@st.composite
def split_points(draw, max_den=60):
    x = draw(unit_rationals(max_den))
    side = draw(st.sampled_from([s for s in (0, 1) if side_feasible(x, s)]))
    return SplitPoint(x, side)


@st.composite
def quad_points(draw, max_den=60):
    x, y = draw(unit_rationals(max_den)), draw(unit_rationals(max_den))
    t = draw(st.sampled_from([t for t in (1, 2, 3, 4) if quadrant_feasible(x, y, t)]))
    return QuadPoint(x, y, t)


@st.composite
def grid_spans(draw, den):
    i = draw(st.integers(0, den - 1))
    j = draw(st.integers(i + 1, den))
    return Fraction(i, den), Fraction(j, den)
