from fractions import Fraction

import pytest
from hypothesis import given

from helpers import quad_points
from splitfractal.algebra import SPLIT_SQUARE, Family, cell_count, family_equals, family_member
from splitfractal.carpet import (
    HoleIndex,
    bottom_edge_points,
    covering_hole,
    first_hole_level,
    holes,
    holes_meeting,
    in_split_carpet_level,
    level_cells,
    q_meets_split_carpet,
    rect_meets_carpet,
    sc_member,
    sc_witness,
    sierpinski_level,
    split_carpet_level,
    split_carpet_window,
    surviving_cells,
    triadic_rectangles,
    window_around,
)
from splitfractal.errors import PreconditionError, ResourceLimitError
from splitfractal.ifs import builtin, iterate
from splitfractal.spaces import BasicSquare, QuadPoint, intersect_squares, member_square

F = Fraction
Q = BasicSquare
THIRD, TWO = F(1, 3), F(2, 3)
CENTRE = Q(THIRD, TWO, THIRD, TWO)


# -- constructions --------------------------------------------------------------------

def test_split_carpet_levels():
    assert split_carpet_level(0).cells == Family.full(SPLIT_SQUARE)
    sc1 = split_carpet_level(1).cells
    assert set(sc1.uniform_cells(1)) == set(level_cells(1)) - {CENTRE}
    assert len(split_carpet_level(2).cells.uniform_cells(2)) == 64


@pytest.mark.parametrize("k", range(6))
def test_cell_counts(k):
    assert cell_count(split_carpet_level(k).cells, k) == 8 ** k
    assert cell_count(sierpinski_level(k).cells, k) == 8 ** k


def test_sierpinski_levels():
    assert sierpinski_level(0).cells.pieces == (Q(0, 1, 0, 1),)
    c1 = sierpinski_level(1).cells.uniform_cells(1)
    assert len(c1) == 8 and all(B.b - B.a == THIRD == B.d - B.c for B in c1)


def test_level_cap():
    with pytest.raises(ResourceLimitError):
        split_carpet_level(7)
    with pytest.raises(ResourceLimitError):
        split_carpet_level(3, cap=100)
    with pytest.raises(PreconditionError):
        split_carpet_level(-1)


@pytest.mark.parametrize("k", range(5))
def test_iterates_of_the_square_are_the_approximants(k):
    assert family_equals(iterate(builtin("carpet_split"), Family.full(SPLIT_SQUARE), k), split_carpet_level(k).cells)


def test_hole_index_range():
    assert HoleIndex(1, 0, 0).square() == CENTRE
    assert len(holes(3)) == 81
    for bad in [(0, 0, 0), (2, 3, 0), (2, 0, -1)]:
        with pytest.raises(PreconditionError):
            HoleIndex(*bad)


# -- digit criterion --------------------------------------------------------------------------

@pytest.mark.parametrize("p, expected", [
    (QuadPoint(THIRD, THIRD, 4), False),
    (QuadPoint(THIRD, THIRD, 2), True),
    (QuadPoint(F(1, 2), F(1, 2), 1), False),
    (QuadPoint(0, 0, 4), True),
    (QuadPoint(F(1, 4), F(3, 4), 3), True),
])
def test_sc_member_examples(p, expected):
    assert sc_member(p) is expected
    for k in range(9):
        assert in_split_carpet_level(p, k) == (first_hole_level(p) is None or first_hole_level(p) > k)


def test_sc_member_examples_agree_with_holes():
    assert member_square(QuadPoint(THIRD, THIRD, 4), CENTRE)
    assert member_square(QuadPoint(F(1, 2), F(1, 2), 1), CENTRE)
    p = QuadPoint(THIRD, THIRD, 2)
    for k in range(7):
        assert family_member(p, split_carpet_level(k).cells)


@given(quad_points(max_den=90))
def test_first_hole_level_names_a_hole_containing_the_point(p):
    k = first_hole_level(p)
    if k is None:
        return
    if k <= 5:
        found = [H for H in holes(k) if member_square(p, H)]
    else:
        found = [H for H in holes_meeting(window_around(p, k - 1), k) if member_square(p, H)]
    assert len(found) == 1
    assert in_split_carpet_level(p, k - 1) and not in_split_carpet_level(p, k)


@given(quad_points(max_den=90))
def test_digits_agree_with_set_algebra(p):
    fh = first_hole_level(p)
    for k in range(7):
        expected = fh is None or fh > k
        assert family_member(p, split_carpet_level(k).cells) == expected
        assert family_member(p, split_carpet_window(window_around(p, max(k - 3, 0)), k)) == expected


def test_bottom_edge_copy_of_split_interval():
    points = bottom_edge_points(81)
    assert len(points) == 160
    assert all(sc_member(p) for p in points)


def test_holes_meeting_is_complete():
    N = Q(F(1, 9), F(2, 9), F(2, 9), F(1, 3))
    for k in range(1, 5):
        expected = {H for H in holes(k) if intersect_squares(H, N) is not None}
        assert set(holes_meeting(N, k)) == expected


# -- hole oracles ------------------------------------------------------------------------------

def alive_corner_inside(a, b, c, d, level):
    """A carpet point inside the open rectangle: the lower-left corner of an
    alive level-``level`` cell (its corner sub-cell survives forever)."""
    for B in sierpinski_level(level).cells.uniform_cells(level):
        if a < B.a < b and c < B.c < d:
            return B.a, B.c
    return None


@pytest.mark.parametrize("rect, expected", [
    ((THIRD, TWO, THIRD, TWO), False),
    ((0, 1, 0, 1), True),
    ((F(3, 10), F(2, 5), F(3, 10), F(2, 5)), True),
    ((F(10, 27), F(11, 27), F(1, 2), F(5, 9)), False),
])
def test_rect_meets_carpet_examples(rect, expected):
    assert rect_meets_carpet(*rect) is expected
    if expected:
        assert alive_corner_inside(*rect, 4) is not None


def test_rect_meets_carpet_against_grid_brute_force():
    # a grid-aligned open rectangle meets C iff one of its cells is alive
    for L in (1, 2):
        alive = set(sierpinski_level(L).cells.uniform_cells(L))
        n = 3 ** L
        for a, b, c, d in triadic_rectangles(L):
            inside = {Q(F(i, n), F(i + 1, n), F(j, n), F(j + 1, n))
                      for i in range(int(a * n), int(b * n)) for j in range(int(c * n), int(d * n))}
            assert rect_meets_carpet(a, b, c, d) == bool(inside & alive)


def test_covering_hole():
    assert covering_hole(THIRD, TWO, THIRD, TWO) == HoleIndex(1, 0, 0)
    assert covering_hole(F(10, 27), F(11, 27), F(1, 2), F(5, 9)) == HoleIndex(1, 0, 0)
    assert covering_hole(F(1, 27), F(2, 27), F(4, 27), F(5, 27)) == HoleIndex(3, 0, 1)
    with pytest.raises(PreconditionError):
        covering_hole(TWO, THIRD, 0, 1)


@pytest.mark.parametrize("B, expected", [(CENTRE, False), (Q(0, 1, 0, 1), True), (Q(THIRD, TWO, 0, THIRD), True)])
def test_q_meets_examples(B, expected):
    assert q_meets_split_carpet(B) is expected
    assert q_meets_split_carpet(B, depth=4) is expected


@pytest.mark.parametrize("level", [1, 2, 3])
def test_q_meets_cross_check_on_every_cell(level):
    for B in level_cells(level):
        meets = q_meets_split_carpet(B)
        w = sc_witness(B)
        assert (w is not None) == meets
        if w is not None:
            assert member_square(w, B) and sc_member(w)


def test_surviving_cells():
    assert surviving_cells(0) == [Q(0, 1, 0, 1)]
    assert set(surviving_cells(1)) == set(level_cells(1)) - {CENTRE}
    sc2 = surviving_cells(2)
    assert len(sc2) == 64
    assert family_equals(Family.of(SPLIT_SQUARE, sc2), split_carpet_level(2).cells)


def test_triadic_rectangle_counts():
    assert [len(triadic_rectangles(L)) for L in (0, 1, 2)] == [1, 36, 2025]
