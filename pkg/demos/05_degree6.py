"""Degree-6 denominator iteration for 1/(x^6 + a x^4 + b x^2 + 1).

(a, b) -> ((ab + 5a + 5b + 9)/(a + b + 2)^(4/3), (a + b + 6)/(a + b + 2)^(2/3))
has (3, 3), the coefficients of (x^2 + 1)^3, as an attracting fixed point.
"""

from landen import Degree6Denominator, iterate6, step6

print("step6(3, 3) =", step6(Degree6Denominator(3.0, 3.0)))
for start in [(0.0, 0.0), (1.0, 1.0), (10.0, 10.0), (-1.0, 2.0)]:
    ok, tr = iterate6(Degree6Denominator(*start), tol=1e-12)
    print(f"\nstart {start}: converged={ok} in {tr.steps} steps")
    for row in tr:
        print(f"  {row.n}  a = {row.state.a:.15f}  b = {row.state.b:.15f}  dist = {row.residual:.2e}")
