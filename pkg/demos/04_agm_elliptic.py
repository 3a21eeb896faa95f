"""Arithmetic-geometric mean and the complete elliptic integral.

G(a, b) = int_0^{pi/2} dθ / sqrt(a^2 cos^2 θ + b^2 sin^2 θ) equals pi/(2 AGM(a, b)).
The AGM pair map leaves G unchanged (Gauss), and convergence is quadratic.
"""

import math

from landen import AgmPair, agm, agm_step, agm_trace, convergence_order, elliptic_g, elliptic_g_quadrature, elliptic_k, lemniscate_check

tr = agm_trace(AgmPair(1.0, math.sqrt(2.0)))
for row in tr:
    print(f"{row.n}  a = {row.state.a:.16f}  b = {row.state.b:.16f}  |a-b| = {row.residual:.2e}")
print(f"order of convergence: {convergence_order(tr):.3f}")

a, b = 3.0, 1.0
print(f"\nG(3, 1) by AGM        {elliptic_g(a, b):.15f}")
print(f"G(3, 1) by quadrature {elliptic_g_quadrature(a, b).value:.15f}")
nxt = agm_step(AgmPair(a, b))
print(f"G after one AGM step  {elliptic_g(nxt.a, nxt.b):.15f}")
print(f"K(0.5) = {elliptic_k(0.5):.15f}")

via_agm, via_integral = lemniscate_check()
print(f"\n1/AGM(1, sqrt 2)             {via_agm:.15f}")
print(f"(2/pi) int_0^1 dx/sqrt(1-x^4) {via_integral:.15f}")
print(f"AGM(1, sqrt 2) = {agm(AgmPair(1.0, math.sqrt(2.0))):.15f}")
