"""The split carpet SC: cutting out clopen holes leaves a compact set.

Run: python demos/03_split_carpet.py
"""
from fractions import Fraction as F

from splitfractal import QuadPoint, cell_count, first_hole_level, sc_member, split_carpet_level

for k in range(4):
    sc = split_carpet_level(k).cells
    print(f"SC_{k}: {len(sc):3d} canonical pieces, {cell_count(sc, k):3d} level cells")

print("\nMembership by side-aware ternary digits:")
for p in (QuadPoint(F(1, 3), F(1, 3), 2), QuadPoint(F(1, 3), F(1, 3), 4), QuadPoint(F(1, 2), F(1, 2), 1)):
    level = first_hole_level(p)
    where = "in SC" if sc_member(p) else f"removed by a level-{level} hole"
    print(f"  ({p.x}, {p.y}, t={p.t}): {where}")
