"""Rational Landen transformation for ``ax^2 + bx + c``.

The map

    a' = a [(a+3c)^2 - 3b^2] / D
    b' = b [3(a-c)^2 - b^2] / D
    c' = c [(3a+c)^2 - 3b^2] / D,      D = (3a+c)(a+3c) - b^2

leaves ``int_R dx / (ax^2 + bx + c)`` unchanged and conserves the
discriminant ``4ac - b^2``.  Its iterates converge cubically to
``(w/2, 0, w/2)`` with ``w = sqrt(4ac - b^2)``, so the integral equals
``pi / lim a_n``.

Every function here uses plain arithmetic only, so the numeric backend
follows the coefficient type: ``float`` gives hardware double precision,
:class:`fractions.Fraction` gives exact rational results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator, List, Tuple, Union

from .errors import InvalidInputError, NoConvergenceError

Real = Union[float, Fraction]

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 30


@dataclass(frozen=True)
class Quadratic:
    """Coefficients of ``ax^2 + bx + c`` with ``a, c > 0`` and ``4ac > b^2``."""

    a: Real
    b: Real
    c: Real

    def __post_init__(self) -> None:
        if not (self.a > 0 and self.c > 0):
            raise InvalidInputError(
                f"need a > 0 and c > 0, got a={self.a}, c={self.c}"
            )
        if 4 * self.a * self.c - self.b * self.b <= 0:
            raise InvalidInputError(
                f"4ac - b^2 must be positive for a convergent integral "
                f"(a={self.a}, b={self.b}, c={self.c})"
            )

    @classmethod
    def exact(cls, a: Any, b: Any, c: Any) -> "Quadratic":
        """Build a rational-backend quadratic; accepts ints, floats, ``"p/q"``."""
        return cls(Fraction(a), Fraction(b), Fraction(c))

    def as_float(self) -> "Quadratic":
        return Quadratic(float(self.a), float(self.b), float(self.c))

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in self)

    @property
    def magnitude(self) -> float:
        """Size of the state, used to turn residuals into relative errors."""
        return float(abs(self.a) + abs(self.c))

    def __iter__(self) -> Iterator[Real]:
        return iter((self.a, self.b, self.c))

    def __call__(self, x: Real) -> Real:
        return (self.a * x + self.b) * x + self.c


@dataclass(frozen=True)
class TraceRow:
    n: int
    state: Any
    residual: Real


@dataclass(frozen=True)
class IterationTrace:
    """Ordered iteration history; row ``n`` holds the state after ``n`` steps."""

    rows: Tuple[TraceRow, ...]

    def __post_init__(self) -> None:
        for i, row in enumerate(self.rows):
            if row.n != i:
                raise ValueError(f"row indices must run 0, 1, 2, ...; got {row.n} at {i}")

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[TraceRow]:
        return iter(self.rows)

    def __getitem__(self, i: int) -> TraceRow:
        return self.rows[i]

    @property
    def residuals(self) -> List[Real]:
        return [row.residual for row in self.rows]

    @property
    def steps(self) -> int:
        return len(self.rows) - 1


def discriminant(q: Quadratic) -> Real:
    """Return ``4ac - b^2``."""
    return 4 * q.a * q.c - q.b * q.b


def residual(q: Quadratic) -> Real:
    """Distance from the fixed-point set: ``|b| + |a - c|``."""
    return abs(q.b) + abs(q.a - q.c)


def landen_step(q: Quadratic) -> Quadratic:
    """Apply one rational Landen transformation."""
    a, b, c = q.a, q.b, q.c
    den = (3 * a + c) * (a + 3 * c) - b * b
    b2 = b * b
    return Quadratic(
        a * ((a + 3 * c) ** 2 - 3 * b2) / den,
        b * (3 * (a - c) ** 2 - b2) / den,
        c * ((3 * a + c) ** 2 - 3 * b2) / den,
    )


def is_fixed_point(q: Quadratic) -> bool:
    return q.b == 0 and q.a == q.c


def trace(q: Quadratic, steps: int) -> IterationTrace:
    """Run exactly ``steps`` Landen steps and record every state."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    rows = [TraceRow(0, q, residual(q))]
    for n in range(1, steps + 1):
        q = landen_step(q)
        rows.append(TraceRow(n, q, residual(q)))
    return IterationTrace(tuple(rows))


def iterate(
    q: Quadratic, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> Tuple[Real, IterationTrace]:
    """Iterate the Landen map until ``|b_n| + |a_n - c_n| <= tol``.

    Returns the final ``a_n`` (an approximation of ``sqrt(4ac - b^2) / 2``)
    together with the full trace.  Raises :class:`NoConvergenceError` if the
    tolerance is not met after ``max_iter`` steps.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    rows = [TraceRow(0, q, residual(q))]
    while rows[-1].residual > tol:
        if len(rows) > max_iter:
            raise NoConvergenceError(
                f"residual {float(rows[-1].residual):.3e} > tol={tol:g} "
                f"after {max_iter} steps"
            )
        q = landen_step(q)
        rows.append(TraceRow(len(rows), q, residual(q)))
    return q.a, IterationTrace(tuple(rows))


def integral_value(q: Quadratic) -> float:
    """Closed form ``2 pi / sqrt(4ac - b^2)`` of the integral over the line."""
    return 2 * math.pi / math.sqrt(discriminant(q))


def evaluate_by_iteration(
    q: Quadratic, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> float:
    """Evaluate the integral as ``pi / lim a_n``."""
    limit, _ = iterate(q, tol, max_iter)
    return math.pi / float(limit)


def limit_value(q: Quadratic) -> float:
    """Common limit ``sqrt(4ac - b^2) / 2`` of ``a_n`` and ``c_n``."""
    return math.sqrt(discriminant(q)) / 2

