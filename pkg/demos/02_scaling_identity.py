"""The polynomial scaling behind one Landen step, checked in exact arithmetic.

Multiplying a x^2 + b x + c by a quartic z0 x^4 + ... + z4 gives
e0 U^2 + e1 U V + e2 V^2, where U = x^3 - 3x and V = 3x^2 - 1.  Both sides
have degree six, so agreement at seven nodes proves the identity.  Dividing
8 (e0, e1, e2) by N = 3 z4 + z2 + 3 z0 gives the next quadratic.
"""

from landen import Quadratic, landen_step, next_quadratic_via_normalization, scaling_from
from landen.scaling import IDENTITY_NODES, identity_residuals

q = Quadratic.exact(4, 3, 1)
s = scaling_from(q)
print("z =", [str(v) for v in s.z])
print("e =", [str(v) for v in s.e])
print("N = 3 z4 + z2 + 3 z0 =", s.normalizer)

print("\nresiduals at the nodes", IDENTITY_NODES)
print([str(r) for r in identity_residuals(q, s)])

print("\n8 e / N        :", next_quadratic_via_normalization(q))
print("landen_step(q) :", landen_step(q))
