"""Convergence analysis of the quadratic Landen map.

In the variables ``x = a + c``, ``y = b``, ``z = a - c`` the map becomes

    x' = x (4x^2 - 3z^2 - 3y^2) / (4x^2 - y^2 - z^2)
    z' = z (z^2 - 3y^2)         / (4x^2 - y^2 - z^2)
    y' = y (3z^2 - y^2)         / (4x^2 - y^2 - z^2)

and ``x^2 - y^2 - z^2 = w^2`` is conserved.  Eliminating ``y, z`` leaves
the scalar map ``x' = x (x^2 + 3w^2) / (3x^2 + w^2)``, which is cotangent
triplication in disguise: ``x_n = w coth(3^n t)`` with
``t = arccoth((a + c) / w)``.  The error ``x_n / w - 1`` is therefore
exactly ``2 / (exp(2 t 3^n) - 1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Union

import numpy as np

from .errors import InsufficientDataError
from .quad_landen import IterationTrace, Quadratic, Real, discriminant

# log(float max) / 2: beyond this exp(2 t 3^n) overflows
_EXP_LIMIT = 709.0


@dataclass(frozen=True)
class ReducedState:
    x: Real
    y: Real
    z: Real

    @property
    def invariant(self) -> Real:
        """``x^2 - y^2 - z^2``, equal to the discriminant ``4ac - b^2``."""
        return self.x * self.x - self.y * self.y - self.z * self.z


@dataclass(frozen=True)
class ConvergenceParams:
    """``w = sqrt(4ac - b^2)``, ``d = (a + c) / w`` and ``t = arccoth(d)``.

    At the fixed point ``d == 1`` and ``t`` is ``inf``; :attr:`converged`
    flags that case so callers need not special-case the numbers.
    """

    w: float
    d: float
    t: float

    @property
    def converged(self) -> bool:
        return math.isinf(self.t)


def to_reduced(q: Quadratic) -> ReducedState:
    return ReducedState(q.a + q.c, q.b, q.a - q.c)


def from_reduced(s: ReducedState) -> Quadratic:
    return Quadratic((s.x + s.z) / 2, s.y, (s.x - s.z) / 2)


def reduced_step(s: ReducedState) -> ReducedState:
    x, y, z = s.x, s.y, s.z
    x2, y2, z2 = x * x, y * y, z * z
    den = 4 * x2 - y2 - z2
    return ReducedState(
        x * (4 * x2 - 3 * z2 - 3 * y2) / den,
        y * (3 * z2 - y2) / den,
        z * (z2 - 3 * y2) / den,
    )


def collapsed_step(x: Real, w: Real) -> Real:
    """One step of the scalar map ``x (x^2 + 3w^2) / (3x^2 + w^2)``."""
    x2, w2 = x * x, w * w
    return x * (x2 + 3 * w2) / (3 * x2 + w2)


def collapsed_orbit(x0: Real, w: Real, steps: int) -> List[Real]:
    xs = [x0]
    for _ in range(steps):
        xs.append(collapsed_step(xs[-1], w))
    return xs


def params_from(q: Quadratic) -> ConvergenceParams:
    """Derive ``(w, d, t)``; ``t`` is ``inf`` at the fixed point.

    ``d - 1`` is formed as ``(b^2 + (a - c)^2) / (w (a + c + w))`` from exact
    rational intermediates, so ``t`` keeps full precision even when ``d`` is
    within rounding of 1 or ``4ac - b^2`` nearly cancels.
    """
    a, b, c = (Fraction(v) for v in q)
    w = math.sqrt(4 * a * c - b * b)
    gap = b * b + (a - c) ** 2
    if gap == 0:
        return ConvergenceParams(w, 1.0, math.inf)
    d_minus_1 = gap / (Fraction(w) * (a + c + Fraction(w)))
    if float(d_minus_1) > 1e-300:
        t = 0.5 * math.log1p(2.0 / float(d_minus_1))
    else:
        # d - 1 underflows a double; take the log of the exact ratio instead
        t = 0.5 * (_log(2 + d_minus_1) - _log(d_minus_1))
    return ConvergenceParams(w, float(a + c) / w, t)


def _growth(p: ConvergenceParams, n: int) -> float:
    """``exp(2 t 3^n) - 1``, or ``inf`` once it overflows."""
    if n < 0:
        raise ValueError("n must be non-negative")
    arg = 2.0 * p.t * 3.0**n
    if arg > _EXP_LIMIT:
        return math.inf
    return math.expm1(arg)


def closed_form_x(p: ConvergenceParams, n: int) -> float:
    """``x_n = w coth(3^n t)`` evaluated as ``w (E + 1) / (E - 1)``."""
    g = _growth(p, n)
    if math.isinf(g):
        return p.w
    return p.w * (1.0 + 2.0 / g)


def error_bound(p: ConvergenceParams, n: int) -> float:
    """``|x_n / w - 1| = 2 / (exp(2 t 3^n) - 1)``; decays like ``exp(-2 t 3^n)``."""
    g = _growth(p, n)
    if math.isinf(g):
        return 0.0
    return 2.0 / g


def _log(v: Real) -> float:
    # Fractions deep into an exact orbit underflow float(); logs of the parts do not
    if isinstance(v, Fraction):
        return math.log(v.numerator) - math.log(v.denominator)
    return math.log(v)


def convergence_order(
    trace: Union[IterationTrace, Sequence[Real]],
    *,
    ceiling: float = 0.5,
    floor: float = 1e-12,
) -> float:
    """Least-squares slope of ``log r_{n+1}`` against ``log r_n``.

    For ``r_{n+1} ~ C r_n^p`` the slope is the order ``p``.  Residuals are
    divided by the state's ``magnitude`` when the rows carry one.  Only the
    trailing run of relative residuals inside ``(floor, ceiling)`` is fitted:
    the ceiling drops the pre-asymptotic start, the floor drops values
    dominated by rounding.  Exact rational residuals are never below the
    floor's reach, since they carry no rounding.
    """
    if isinstance(trace, IterationTrace):
        rel = []
        for row in trace:
            scale = getattr(row.state, "magnitude", 1.0)
            rel.append((row.residual, scale))
        exact = all(isinstance(r, Fraction) for r, _ in rel)
    else:
        rel = [(r, 1.0) for r in trace]
        exact = all(isinstance(r, Fraction) for r, _ in rel)

    logs: List[float] = []
    for r, scale in rel:
        if r == 0:
            break
        lr = _log(abs(r)) - math.log(scale)
        if not exact and lr <= math.log(floor):
            break
        logs.append(lr)
    # skip the pre-asymptotic head
    start = 0
    while start < len(logs) and logs[start] >= math.log(ceiling):
        start += 1
    usable = logs[start:]
    if len(usable) < 3:
        raise InsufficientDataError(
            f"need at least 2 consecutive residual pairs in range, got {max(len(usable) - 1, 0)}"
        )
    xs = np.array(usable[:-1])
    ys = np.array(usable[1:])
    if np.ptp(xs) == 0:
        raise InsufficientDataError("residuals are constant; slope undefined")
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


def reduced_orbit(s: ReducedState, steps: int) -> List[ReducedState]:
    out = [s]
    for _ in range(steps):
        out.append(reduced_step(out[-1]))
    return out


def local_orders(residuals: Iterable[Real]) -> List[float]:
    """Pairwise order estimates ``log(r2/r1) / log(r1/r0)`` along a sequence."""
    logs = [_log(abs(r)) for r in residuals if r != 0]
    return [
        (logs[i + 2] - logs[i + 1]) / (logs[i + 1] - logs[i])
        for i in range(len(logs) - 2)
        if logs[i + 1] != logs[i]
    ]
