"""Arithmetic-geometric mean and the complete elliptic integral.

``G(a, b) = int_0^{pi/2} dtheta / sqrt(a^2 cos^2 + b^2 sin^2)`` is unchanged
when ``(a, b)`` is replaced by the arithmetic and geometric means, so
``G(a, b) = pi / (2 AGM(a, b))``.  The iteration converges quadratically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

from .errors import InvalidInputError, QuadratureFailureError, ToleranceNotMetError
from .quad_landen import IterationTrace, TraceRow
from .quadrature import QuadratureResult, adaptive_quad

DEFAULT_TOL = 1e-15
_MAX_STEPS = 100


@dataclass(frozen=True)
class AgmPair:
    a: float
    b: float

    def __post_init__(self) -> None:
        if not (self.a > 0 and self.b > 0):
            raise InvalidInputError(f"AGM needs positive arguments, got {self.a}, {self.b}")

    @property
    def magnitude(self) -> float:
        return max(self.a, self.b)

    @property
    def gap(self) -> float:
        return abs(self.a - self.b)


@dataclass(frozen=True)
class EllipticParams:
    """``0 < b < a`` with modulus ``k = sqrt(1 - b^2 / a^2)``."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (0 < self.b < self.a):
            raise InvalidInputError(f"need 0 < b < a, got a={self.a}, b={self.b}")

    @property
    def k(self) -> float:
        return math.sqrt(1.0 - (self.b / self.a) ** 2)


def agm_step(p: AgmPair) -> AgmPair:
    return AgmPair(0.5 * (p.a + p.b), math.sqrt(p.a * p.b))


def agm_trace(p: AgmPair, tol: float = DEFAULT_TOL) -> IterationTrace:
    """AGM iterates until ``|a_n - b_n| <= tol * max(a_n, b_n)``.

    The tolerance is relative so the loop terminates for any scale; once
    the means agree to rounding the gap stops shrinking.
    """
    rows = [TraceRow(0, p, p.gap)]
    while p.gap > tol * p.magnitude:
        if len(rows) > _MAX_STEPS:
            break
        nxt = agm_step(p)
        if nxt == p:
            break
        p = nxt
        rows.append(TraceRow(len(rows), p, p.gap))
    return IterationTrace(tuple(rows))


def agm(p: AgmPair, tol: float = DEFAULT_TOL) -> float:
    """``AGM(a, b)``; symmetric and positively homogeneous."""
    return agm_trace(p, tol)[-1].state.a


def elliptic_g(a: float, b: float, tol: float = DEFAULT_TOL) -> float:
    """``G(a, b) = pi / (2 AGM(a, b))``."""
    return math.pi / (2.0 * agm(AgmPair(a, b), tol))


def elliptic_k(k: float) -> float:
    """Complete elliptic integral of the first kind, via ``K(k) = a G(a, b)`` with ``a = 1``."""
    if not 0 <= k < 1:
        raise InvalidInputError(f"modulus must satisfy 0 <= k < 1, got {k}")
    return elliptic_g(1.0, math.sqrt(1.0 - k * k))


def elliptic_g_quadrature(a: float, b: float, tol: float = 1e-12) -> QuadratureResult:
    """Direct quadrature of ``G(a, b)`` in its trigonometric form."""
    AgmPair(a, b)
    a2, b2 = a * a, b * b

    def f(theta: float) -> float:
        c, s = math.cos(theta), math.sin(theta)
        return 1.0 / math.sqrt(a2 * c * c + b2 * s * s)

    return adaptive_quad(f, 0.0, 0.5 * math.pi, tol)


def lemniscate_integral(tol: float = 1e-13) -> QuadratureResult:
    """``(2 / pi) int_0^1 dx / sqrt(1 - x^4)``.

    ``x = 1 - t^2`` removes the endpoint singularity:
    ``1 - x^4 = t^2 (2 - t^2) (1 + (1 - t^2)^2)``, so the integrand becomes
    ``2 / sqrt((2 - t^2)(1 + (1 - t^2)^2))``, bounded on ``[0, 1]``.
    """

    def f(t: float) -> float:
        u = 1.0 - t * t
        return 2.0 / math.sqrt((2.0 - t * t) * (1.0 + u * u))

    try:
        res = adaptive_quad(f, 0.0, 1.0, tol)
    except ToleranceNotMetError as exc:
        raise QuadratureFailureError(f"lemniscate integral: {exc}") from exc
    scale = 2.0 / math.pi
    return QuadratureResult(scale * res.value, scale * res.error_estimate, res.evaluations)


def lemniscate_check() -> Tuple[float, float]:
    """``(1 / AGM(1, sqrt 2), (2/pi) int_0^1 dx / sqrt(1 - x^4))``."""
    return 1.0 / agm(AgmPair(1.0, math.sqrt(2.0))), lemniscate_integral().value
