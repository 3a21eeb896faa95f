"""Denominator part of the degree-6 rational Landen transformation.

For ``x^6 + a x^4 + b x^2 + 1`` the parameters move by

    a' = (ab + 5a + 5b + 9) / (a + b + 2)^(4/3)
    b' = (a + b + 6) / (a + b + 2)^(2/3)

and converge to ``(3, 3)`` exactly when the denominator has no real zero.
The numerator rules are not covered here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from .errors import InvalidInputError
from .quad_landen import IterationTrace, TraceRow

FIXED_POINT = (3.0, 3.0)


@dataclass(frozen=True)
class Degree6Denominator:
    a: float
    b: float

    def __post_init__(self) -> None:
        if not self.a + self.b + 2 > 0:
            raise InvalidInputError(
                f"a + b + 2 must be positive for real fractional powers, "
                f"got a={self.a}, b={self.b}"
            )

    @property
    def magnitude(self) -> float:
        return max(abs(self.a), abs(self.b), 1.0)

    def __call__(self, x: float) -> float:
        x2 = x * x
        return ((x2 + self.a) * x2 + self.b) * x2 + 1.0


def step6(s: Degree6Denominator) -> Degree6Denominator:
    a, b = s.a, s.b
    # cbrt first: 8 -> 2 exactly, so (3, 3) maps to itself without rounding
    r = float(np.cbrt(a + b + 2))
    r2 = r * r
    return Degree6Denominator((a * b + 5 * a + 5 * b + 9) / (r2 * r2), (a + b + 6) / r2)


def distance_to_fixed_point(s: Degree6Denominator) -> float:
    return abs(s.a - FIXED_POINT[0]) + abs(s.b - FIXED_POINT[1])


def denominator_positive(a: float, b: float) -> bool:
    """True when ``x^6 + a x^4 + b x^2 + 1 > 0`` for every real ``x``.

    Equivalent to ``u^3 + a u^2 + b u + 1`` having no root with ``u >= 0``;
    the constant term rules out ``u = 0``.
    """
    roots = np.roots([1.0, a, b, 1.0])
    for r in roots:
        if abs(r.imag) <= 1e-9 * max(1.0, abs(r)) and r.real >= 0:
            return False
    return True


def iterate6(
    s: Degree6Denominator, tol: float = 1e-10, max_iter: int = 25
) -> Tuple[bool, IterationTrace]:
    """Iterate :func:`step6`; converged means ``|a_n - 3| + |b_n - 3| <= tol``.

    A step that leaves the region ``a + b + 2 > 0`` raises
    :class:`InvalidInputError`.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    rows: List[TraceRow] = [TraceRow(0, s, distance_to_fixed_point(s))]
    while rows[-1].residual > tol:
        if len(rows) > max_iter:
            return False, IterationTrace(tuple(rows))
        s = step6(s)
        rows.append(TraceRow(len(rows), s, distance_to_fixed_point(s)))
    return True, IterationTrace(tuple(rows))
