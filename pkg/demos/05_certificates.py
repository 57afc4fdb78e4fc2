"""Finite-horizon certificates that each system's attractor attracts every seed.

Run: python demos/05_certificates.py   (about half a minute)
"""
from splitfractal import attractor_certificate, builtin

for name, m, N in [("interval_halving_split", 2, 6), ("square_quartering_split", 2, 6), ("carpet_split", 1, 4)]:
    report = attractor_certificate(builtin(name), m=m, N=N)
    print(f"{name:24s} grid level {m}, horizon {N}: {report.verdict}, n0 = {report.n0}, "
          f"{len(report.seeds)} seeds")
