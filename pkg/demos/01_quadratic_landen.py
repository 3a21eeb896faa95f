"""Iterate the rational Landen map on 1/(4x^2 + 3x + 1).

The integral of 1/(a x^2 + b x + c) over the real line stays fixed under
the map, and the coefficients collapse onto a = c, b = 0.  The common
limit is sqrt(4ac - b^2)/2, so the integral is 2*pi/sqrt(4ac - b^2).
"""

import math

from landen import Quadratic, iterate, landen_step
from landen.quad_landen import trace

q0 = Quadratic(4.0, 3.0, 1.0)
print(f"{'n':>2} {'a':>20} {'b':>24} {'c':>20}")
for row in trace(q0, 4):
    a, b, c = row.state
    print(f"{row.n:>2} {a:>20.13f} {b:>24.13e} {c:>20.13f}")

# Exact arithmetic shows the first step is rational.
print("\nexact first step:", landen_step(Quadratic.exact(4, 3, 1)))

limit, tr = iterate(q0, tol=1e-12)
print(f"\nlimit {limit:.15f} after {tr.steps} steps; sqrt(7)/2 = {math.sqrt(7) / 2:.15f}")
print(f"integral pi/limit = {math.pi / limit:.15f}; 2 pi/sqrt(7) = {2 * math.pi / math.sqrt(7):.15f}")
