"""Basic squares Q(a,b;c,d) are clopen; families of them form a Boolean algebra.

Run: python demos/02_basis_algebra.py
"""
from fractions import Fraction as F

from splitfractal import (
    BasicSquare,
    QuadPoint,
    canonicalize,
    complement_square,
    family_complement,
    family_equals,
    homeo_h,
    intersect_squares,
    member_square,
)

A = BasicSquare(F(0), F(1, 2), F(0), F(1, 2))
B = BasicSquare(F(1, 3), F(1), F(1, 3), F(1))
print(f"{A} n {B} = {intersect_squares(A, B)}")
print(f"complement of {A}: {', '.join(map(str, complement_square(A)))}")

# the centre point in each quadrant: only some copies lie in A
for t in (1, 2, 3, 4):
    p = QuadPoint(F(1, 2), F(1, 2), t)
    hx, hy = homeo_h(p)
    print(f"  (1/2, 1/2, t={t}) in {A}? {member_square(p, A)!s:5}   sides under h: ({hx.side}, {hy.side})")

fam = canonicalize([A, B], space="split_square")
print(f"\nA u B canonical: {len(fam)} pieces; complement has {len(family_complement(fam))}")
print("double complement is the identity:", family_equals(family_complement(family_complement(fam)), fam))
