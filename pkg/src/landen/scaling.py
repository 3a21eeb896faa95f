"""Polynomial scaling behind the quadratic Landen transformation.

Multiplying ``ax^2 + bx + c`` by the quartic ``z0 x^4 + ... + z4`` turns
it into ``e0 U^2 + e1 U V + e2 V^2`` with ``U = x^3 - 3x`` and
``V = 3x^2 - 1``.  After ``x = tan(theta)`` the new denominator is a
quadratic form in ``sin(3 theta), cos(3 theta)``, and normalising its
coefficients by ``N = 3 z4 + z2 + 3 z0`` gives the next quadratic.
"""

from __future__ import annotations

from dataclasses import astuple, dataclass
from typing import Iterable, Tuple

from .quad_landen import Quadratic, Real

#: Seven distinct nodes; two degree-6 polynomials agreeing there are equal.
IDENTITY_NODES: Tuple[int, ...] = (-3, -2, -1, 0, 1, 2, 3)


def u_poly(x: Real) -> Real:
    """``U(x) = x^3 - 3x``; ``U(tan t) cos^3 t = -sin 3t``."""
    return x * x * x - 3 * x


def v_poly(x: Real) -> Real:
    """``V(x) = 3x^2 - 1``; ``V(tan t) cos^3 t = -cos 3t``."""
    return 3 * x * x - 1


@dataclass(frozen=True)
class ScalingCoefficients:
    z0: Real
    z1: Real
    z2: Real
    z3: Real
    z4: Real
    e0: Real
    e1: Real
    e2: Real

    @property
    def z(self) -> Tuple[Real, ...]:
        return (self.z0, self.z1, self.z2, self.z3, self.z4)

    @property
    def e(self) -> Tuple[Real, Real, Real]:
        return (self.e0, self.e1, self.e2)

    @property
    def normalizer(self) -> Real:
        """``3 z4 + z2 + 3 z0``, equal to ``8[(3a+c)(a+3c) - b^2]``."""
        return 3 * self.z4 + self.z2 + 3 * self.z0

    def multiplier(self, x: Real) -> Real:
        """The quartic ``z0 x^4 + z1 x^3 + z2 x^2 + z3 x + z4``."""
        acc = self.z0
        for coef in (self.z1, self.z2, self.z3, self.z4):
            acc = acc * x + coef
        return acc

    def uv_form(self, x: Real) -> Real:
        u, v = u_poly(x), v_poly(x)
        return self.e0 * u * u + self.e1 * u * v + self.e2 * v * v

    def astuple(self) -> Tuple[Real, ...]:
        return astuple(self)


def scaling_from(q: Quadratic) -> ScalingCoefficients:
    a, b, c = q.a, q.b, q.c
    b2 = b * b
    p = (a + 3 * c) ** 2 - 3 * b2
    r = (3 * a + c) ** 2 - 3 * b2
    return ScalingCoefficients(
        z0=p,
        z1=8 * b * (a - 3 * c),
        z2=-6 * a * a + 10 * b2 + 44 * a * c - 6 * c * c,
        z3=8 * b * (c - 3 * a),
        z4=r,
        e0=a * p,
        e1=b * (3 * (a - c) ** 2 - b2),
        e2=c * r,
    )


def identity_residuals(
    q: Quadratic, s: ScalingCoefficients, nodes: Iterable[Real] = IDENTITY_NODES
) -> list:
    """Signed gap ``q(x) * multiplier(x) - uv_form(x)`` at each node."""
    return [q(x) * s.multiplier(x) - s.uv_form(x) for x in nodes]


def verify_polynomial_identity(
    q: Quadratic, s: ScalingCoefficients, nodes: Iterable[Real] = IDENTITY_NODES
) -> Real:
    """Largest absolute gap between the two degree-6 sides over ``nodes``.

    With rational coefficients the result is exactly zero when the identity
    holds; seven distinct nodes make that a proof.
    """
    return max(abs(r) for r in identity_residuals(q, s, nodes))


def next_quadratic_via_normalization(q: Quadratic) -> Quadratic:
    """Next quadratic as ``8 e / N``; coincides with :func:`landen_step`."""
    s = scaling_from(q)
    n = s.normalizer
    return Quadratic(8 * s.e0 / n, 8 * s.e1 / n, 8 * s.e2 / n)
