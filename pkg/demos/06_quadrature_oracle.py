"""Adaptive quadrature as an independent check on the algebra.

The triple-angle moments S_k and C_k of the scaling multiplier vanish for
k = 2, 4, which is what lets the step be normalised by a constant.  Every
integral here comes from QUADPACK with its error estimate reported.
"""

from landen import Quadratic, c_integral, integral_value, integrate_rational_line, integrate_trig_form, landen_step, s_integral, scaling_from
from landen.quadrature import periodic_trapezoid, reduced_integral

q = Quadratic(2.5, -1.0, 0.7)
e = scaling_from(q).e
for name, fn, k in [("S_2", s_integral, 2), ("S_4", s_integral, 4), ("C_0", c_integral, 0), ("C_2", c_integral, 2), ("C_4", c_integral, 4)]:
    r = fn(k, e)
    print(f"{name} = {r.value: .3e}  (est. error {r.error_estimate:.1e}, {r.evaluations} evaluations)")

line = integrate_rational_line(q)
print(f"\nreal-line integral       {line.value:.13f}")
print(f"after one Landen step    {integrate_rational_line(landen_step(q)).value:.13f}")
print(f"trigonometric form       {integrate_trig_form(q).value:.13f}")
print(f"N C_0 / 8                {reduced_integral(q):.13f}")
print(f"periodic trapezoid       {periodic_trapezoid(q):.13f}")
print(f"closed form 2pi/sqrt(D)  {integral_value(q):.13f}")
