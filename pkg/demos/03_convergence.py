"""Cubic convergence, seen three ways.

In x = a + c the map collapses to x' = x (x^2 + 3 w^2)/(3 x^2 + w^2), which is
conjugate to tripling an angle: x_n = w coth(3^n t).  So x_n/w - 1 equals
2/(exp(2 t 3^n) - 1) exactly, and the residuals shrink with order three.
"""

from landen import Quadratic, closed_form_x, convergence_order, error_bound, iterate, params_from
from landen.convergence import collapsed_orbit

q = Quadratic(4.0, 3.0, 1.0)
p = params_from(q)
print(f"w = {p.w:.15f}  d = {p.d:.15f}  t = {p.t:.15f}")

xs = collapsed_orbit(float(q.a + q.c), p.w, 4)
print(f"\n{'n':>2} {'iterated x_n':>20} {'w coth(3^n t)':>20} {'error formula':>12}")
for n, x in enumerate(xs):
    print(f"{n:>2} {x:>20.15f} {closed_form_x(p, n):>20.15f} {error_bound(p, n):>12.3e}")

# Exact traces keep shrinking past double precision, which makes the order clean.
_, tr = iterate(Quadratic.exact(4, 3, 1), tol=1e-80, max_iter=8)
print("\nresiduals:", [f"{float(r):.3e}" for r in tr.residuals])
print(f"estimated order: {convergence_order(tr):.4f}")
