"""Seeded generators of valid inputs for property checks."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from .quad_landen import Quadratic


def random_quadratic(rng: np.random.Generator, hi: float = 10.0) -> Quadratic:
    """Float quadratic with ``a, c`` in ``(0, hi]`` and ``|b| < 2 sqrt(ac)``."""
    while True:
        a = hi * (1.0 - rng.random())
        c = hi * (1.0 - rng.random())
        lim = 2.0 * math.sqrt(a * c)
        b = lim * (2.0 * rng.random() - 1.0)
        if 4 * a * c - b * b > 1e-12 * (a + c) ** 2:
            return Quadratic(a, b, c)


def random_exact_quadratic(rng: np.random.Generator, denom: int = 100, hi: int = 10) -> Quadratic:
    """Rational quadratic on the grid ``k / denom`` with ``a, c`` in ``(0, hi]``."""
    top = hi * denom
    big_a = int(rng.integers(1, top + 1))
    big_c = int(rng.integers(1, top + 1))
    # |B| <= isqrt(4AC - 1) guarantees B^2 < 4AC
    m = math.isqrt(4 * big_a * big_c - 1)
    big_b = int(rng.integers(-m, m + 1))
    return Quadratic(Fraction(big_a, denom), Fraction(big_b, denom), Fraction(big_c, denom))


def random_quadratics(seed: int, n: int, exact: bool = False) -> List[Quadratic]:
    rng = np.random.default_rng(seed)
    make = random_exact_quadratic if exact else random_quadratic
    return [make(rng) for _ in range(n)]


def random_agm_pairs(seed: int, n: int, hi: float = 10.0) -> List[Tuple[float, float]]:
    """Pairs ``0 < b < a <= hi``."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        x, y = hi * (1.0 - rng.random()), hi * (1.0 - rng.random())
        if x != y:
            out.append((max(x, y), min(x, y)))
    return out
