"""The 8-map system G rebuilds SC_k exactly: G^k(Q) = SC_k.

Run: python demos/04_hutchinson.py
"""
from fractions import Fraction as F

from splitfractal import Family, QuadPoint, builtin, cloud, family_equals, iterate, split_carpet_level

G = builtin("carpet_split")
Q = Family.full("split_square")
for k in range(5):
    print(f"G^{k}(Q) == SC_{k}: {family_equals(iterate(G, Q, k), split_carpet_level(k).cells)}")

seed = cloud("split_square", [QuadPoint(F(1, 2), F(1, 2), 2)])
for n in range(4):
    print(f"orbit of one point after {n} steps: {len(iterate(G, seed, n))} points")
