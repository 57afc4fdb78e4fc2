"""The split interval: every rational in (0,1) carries a left and a right copy.

Run: python demos/01_split_interval.py
"""
from fractions import Fraction as F

from splitfractal import BasicInterval, SplitPoint, member_interval, ternary_stream

half_left = SplitPoint(F(1, 2), 0)    # reached from the left
half_right = SplitPoint(F(1, 2), 1)   # reached from the right

print("I(0,1/2) and I(1/2,1) split the space at 1/2 without overlap:")
for p in (half_left, half_right):
    print(f"  (x={p.x}, side={p.side}): in I(0,1/2)? {member_interval(p, BasicInterval(F(0), F(1, 2)))}"
          f"   in I(1/2,1)? {member_interval(p, BasicInterval(F(1, 2), F(1)))}")

print("\nTriadic points have two ternary expansions; the side picks one:")
for tail in ("twos", "zeros"):
    s = ternary_stream(F(1, 3), tail)
    print(f"  1/3 with a {tail} tail: preperiod {s.preperiod}, period {s.period}")
