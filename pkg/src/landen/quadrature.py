"""Independent quadrature used to certify the invariance claims.

All integrals are taken over finite intervals with smooth integrands and
handed to QUADPACK's adaptive Gauss-Kronrod routine (``scipy.integrate.quad``),
which bisects subintervals until the 21-point Kronrod / 10-point Gauss
error estimate meets the absolute tolerance.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence, Tuple

import numpy as np
from scipy import integrate

from .errors import InvalidInputError, ToleranceNotMetError
from .quad_landen import Quadratic
from .scaling import ScalingCoefficients, scaling_from

DEFAULT_TOL = 1e-9
HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int

    def __post_init__(self) -> None:
        if self.error_estimate < 0 or self.evaluations < 1:
            raise ValueError("error_estimate must be >= 0 and evaluations >= 1")

    def __float__(self) -> float:
        return self.value


def adaptive_quad(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = DEFAULT_TOL,
    limit: int = 500,
) -> QuadratureResult:
    """Integrate ``f`` over ``[lo, hi]`` to absolute accuracy ``tol``.

    Raises :class:`ToleranceNotMetError` when QUADPACK flags a problem or
    its own error estimate exceeds ``tol``.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            value, err, info = integrate.quad(
                f, lo, hi, epsabs=0.1 * tol, epsrel=1e-13, limit=limit, full_output=1
            )[:3]
        except integrate.IntegrationWarning as exc:
            raise ToleranceNotMetError(str(exc)) from exc
    if not math.isfinite(value) or err > tol:
        raise ToleranceNotMetError(
            f"error estimate {err:.3e} exceeds tol={tol:g} on [{lo}, {hi}]"
        )
    return QuadratureResult(float(value), float(err), int(info["neval"]))


def _float_coeffs(q: Quadratic) -> Tuple[float, float, float]:
    return float(q.a), float(q.b), float(q.c)


def integrate_rational_line(q: Quadratic, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """``int_R dx / (ax^2 + bx + c)`` after compactifying with ``x = tan(theta)``.

    The integrand is evaluated literally as ``f(tan t) sec^2 t``.
    """
    a, b, c = _float_coeffs(q)

    def g(theta: float) -> float:
        x = math.tan(theta)
        return (1.0 + x * x) / ((a * x + b) * x + c)

    return adaptive_quad(g, -HALF_PI, HALF_PI, tol)


def integrate_trig_form(q: Quadratic, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """``int dtheta / (a sin^2 + b sin cos + c cos^2)`` over ``[-pi/2, pi/2]``."""
    a, b, c = _float_coeffs(q)

    def g(theta: float) -> float:
        s, co = math.sin(theta), math.cos(theta)
        return 1.0 / (a * s * s + b * s * co + c * co * co)

    return adaptive_quad(g, -HALF_PI, HALF_PI, tol)


def _check_form(e: Sequence[float]) -> Tuple[float, float, float]:
    e0, e1, e2 = (float(v) for v in e)
    if not (e0 > 0 and e2 > 0 and 4 * e0 * e2 - e1 * e1 > 0):
        raise InvalidInputError(
            f"e0 sin^2 + e1 sin cos + e2 cos^2 is not positive definite: e={e0, e1, e2}"
        )
    return e0, e1, e2


def triple_angle_form(e: Sequence[float]) -> Callable[[float], float]:
    """``theta -> e0 sin^2(3 theta) + e1 sin(3 theta) cos(3 theta) + e2 cos^2(3 theta)``."""
    e0, e1, e2 = _check_form(e)

    def den(theta: float) -> float:
        s, c = math.sin(3 * theta), math.cos(3 * theta)
        return e0 * s * s + e1 * s * c + e2 * c * c

    return den


def trig_moment(
    kind: str,
    k: int,
    e: Sequence[float],
    lo: float = -HALF_PI,
    hi: float = HALF_PI,
    tol: float = DEFAULT_TOL,
) -> QuadratureResult:
    """``int sin(k t)`` (``kind="sin"``) or ``cos(k t)`` over the triple-angle form."""
    den = triple_angle_form(e)
    trig = {"sin": math.sin, "cos": math.cos}[kind]
    return adaptive_quad(lambda t: trig(k * t) / den(t), lo, hi, tol)


def s_integral(k: int, e: Sequence[float], tol: float = DEFAULT_TOL) -> QuadratureResult:
    """``S_k`` over ``[-pi/2, pi/2]``; zero for ``k`` in ``{2, 4}``."""
    if k not in (2, 4):
        raise ValueError(f"S_k is defined here for k in (2, 4), got {k}")
    return trig_moment("sin", k, e, tol=tol)


def c_integral(k: int, e: Sequence[float], tol: float = DEFAULT_TOL) -> QuadratureResult:
    """``C_k`` over ``[-pi/2, pi/2]``; zero for ``k`` in ``{2, 4}``, the normaliser for 0."""
    if k not in (0, 2, 4):
        raise ValueError(f"C_k is defined here for k in (0, 2, 4), got {k}")
    return trig_moment("cos", k, e, tol=tol)


def scaled_trig_integral(q: Quadratic, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """The scaled integrand before any moment vanishes.

    ``sum_k z_{4-k} int sin^k cos^{4-k} / den(3 theta)`` over ``[-pi/2, pi/2]``;
    equal to the original integral.
    """
    s = scaling_from(q)
    z = [float(v) for v in s.z]
    den = triple_angle_form(s.e)

    def g(theta: float) -> float:
        sn, cs = math.sin(theta), math.cos(theta)
        num = sum(z[4 - k] * sn**k * cs ** (4 - k) for k in range(5))
        return num / den(theta)

    return adaptive_quad(g, -HALF_PI, HALF_PI, tol)


def reduced_integral(q: Quadratic, tol: float = DEFAULT_TOL) -> float:
    """``N * C_0 / 8``: what survives once ``S_2, S_4, C_2, C_4`` vanish.

    ``N = 3 z4 + z2 + 3 z0``.  Over ``[0, 2 pi]`` the constant part of the
    scaled numerator is ``N / 16`` and the integral doubles ``C_0``.
    """
    s: ScalingCoefficients = scaling_from(q)
    return float(s.normalizer) * c_integral(0, s.e, tol).value / 8


def periodic_trapezoid(q: Quadratic, n: int = 4096) -> float:
    """Periodic trapezoid rule on the trig form; spectrally accurate cross-check."""
    a, b, c = _float_coeffs(q)
    theta = -HALF_PI + math.pi * np.arange(n) / n
    s, co = np.sin(theta), np.cos(theta)
    return float(math.pi / n * np.sum(1.0 / (a * s * s + b * s * co + c * co * co)))
