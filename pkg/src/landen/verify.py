"""Invariant suites behind ``landen verify``.

Each suite samples seeded random inputs, checks one family of identities
and reports how many samples passed.  Sample counts and tolerances mirror
the package's acceptance tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List

from .agm_elliptic import AgmPair, agm_step, agm_trace, elliptic_g, elliptic_g_quadrature, lemniscate_check
from .convergence import (
    closed_form_x,
    collapsed_orbit,
    convergence_order,
    error_bound,
    params_from,
    reduced_step,
    to_reduced,
)
from .degree6 import Degree6Denominator, iterate6, step6
from .quad_landen import discriminant, iterate, landen_step, trace
from .quadrature import c_integral, integrate_rational_line, s_integral
from .sampling import random_agm_pairs, random_quadratics
from .scaling import next_quadratic_via_normalization, scaling_from, verify_polynomial_identity


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: List[str] = field(default_factory=list)

    def record(self, ok: bool, what: str = "") -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 5:
                self.failures.append(what)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0


def suite_discriminant(seed: int = 1) -> SuiteResult:
    res = SuiteResult("discriminant")
    for q in random_quadratics(seed, 1000, exact=True):
        res.record(discriminant(landen_step(q)) == discriminant(q), f"exact {q}")
    for q in random_quadratics(seed, 1000):
        d0 = discriminant(q)
        drift = abs(discriminant(landen_step(q)) - d0) / d0
        res.record(drift < 1e-13, f"float drift {drift:.2e} for {q}")
    return res


def suite_identity(seed: int = 2) -> SuiteResult:
    res = SuiteResult("identity")
    for q in random_quadratics(seed, 1000, exact=True):
        res.record(verify_polynomial_identity(q, scaling_from(q)) == 0, f"identity {q}")
        res.record(next_quadratic_via_normalization(q) == landen_step(q), f"normalization {q}")
    return res


def suite_invariance(seed: int = 3, tol: float = 1e-9) -> SuiteResult:
    res = SuiteResult("invariance")
    for q in random_quadratics(seed, 200):
        gap = abs(integrate_rational_line(q, tol).value - integrate_rational_line(landen_step(q), tol).value)
        res.record(gap < 2 * tol, f"gap {gap:.2e} for {q}")
    return res


def suite_vanishing(seed: int = 4, tol: float = 1e-9) -> SuiteResult:
    res = SuiteResult("vanishing")
    for q in random_quadratics(seed, 50):
        e = scaling_from(q).e
        worst = max(
            [abs(s_integral(k, e, tol).value) for k in (2, 4)]
            + [abs(c_integral(k, e, tol).value) for k in (2, 4)]
        )
        res.record(worst < tol, f"max |S|,|C| = {worst:.2e} for {q}")
    return res


def suite_conjugacy(seed: int = 5) -> SuiteResult:
    res = SuiteResult("conjugacy")
    for q in random_quadratics(seed, 1000, exact=True):
        res.record(to_reduced(landen_step(q)) == reduced_step(to_reduced(q)), f"conjugacy {q}")
    for q in random_quadratics(seed, 100):
        p = params_from(q)
        xs = collapsed_orbit(float(q.a + q.c), p.w, 8)
        for n, x in enumerate(xs):
            res.record(abs(closed_form_x(p, n) - x) < 1e-12 * p.w, f"closed form n={n} for {q}")
    return res


def suite_cubic(seed: int = 6) -> SuiteResult:
    res = SuiteResult("cubic")
    for q in random_quadratics(seed, 20, exact=True):
        _, tr = iterate(q, tol=1e-60, max_iter=12)
        order = convergence_order(tr)
        res.record(2.8 <= order <= 3.2, f"order {order:.3f} for {q}")
    order = convergence_order(agm_trace(AgmPair(1.0, math.sqrt(2.0))))
    res.record(1.9 <= order <= 2.1, f"AGM order {order:.3f}")
    return res


def suite_gauss(seed: int = 7) -> SuiteResult:
    res = SuiteResult("gauss")
    for a, b in random_agm_pairs(seed, 100):
        nxt = agm_step(AgmPair(a, b))
        gap = abs(elliptic_g(a, b) - elliptic_g(nxt.a, nxt.b))
        res.record(gap < 1e-12, f"G invariance gap {gap:.2e} at {(a, b)}")
    for a, b in random_agm_pairs(seed + 1, 50):
        gap = abs(elliptic_g_quadrature(a, b).value - elliptic_g(a, b))
        res.record(gap < 1e-9, f"G vs quadrature gap {gap:.2e} at {(a, b)}")
    return res


def suite_lemniscate() -> SuiteResult:
    res = SuiteResult("lemniscate")
    via_agm, via_integral = lemniscate_check()
    res.record(abs(via_agm - via_integral) < 5e-12, f"{via_agm!r} vs {via_integral!r}")
    return res


def suite_degree6() -> SuiteResult:
    res = SuiteResult("degree6")
    fixed = step6(Degree6Denominator(3.0, 3.0))
    res.record(abs(fixed.a - 3) <= 1e-15 and abs(fixed.b - 3) <= 1e-15, f"step6(3,3) = {fixed}")
    for start in ((0.0, 0.0), (1.0, 1.0), (10.0, 10.0)):
        ok, tr = iterate6(Degree6Denominator(*start), tol=1e-10, max_iter=25)
        res.record(ok, f"no convergence from {start} in {tr.steps} steps")
    return res


def suite_bounds(seed: int = 8) -> SuiteResult:
    res = SuiteResult("error-bound")
    for q in random_quadratics(seed, 100):
        p = params_from(q)
        xs = collapsed_orbit(float(q.a + q.c), p.w, 3)
        for n, x in enumerate(xs):
            bound = error_bound(p, n)
            actual = abs(x / p.w - 1)
            ok = actual == bound or abs(actual - bound) <= 1e-12 * bound + 1e-15
            res.record(ok, f"n={n}: |x/w-1|={actual:.3e} vs bound {bound:.3e}")
    return res


SUITES: Dict[str, Callable[[], SuiteResult]] = {
    "discriminant": suite_discriminant,
    "identity": suite_identity,
    "invariance": suite_invariance,
    "vanishing": suite_vanishing,
    "conjugacy": suite_conjugacy,
    "cubic": suite_cubic,
    "gauss": suite_gauss,
    "lemniscate": suite_lemniscate,
    "degree6": suite_degree6,
    "error-bound": suite_bounds,
}


def run_suites(names: List[str]) -> List[SuiteResult]:
    if "all" in names:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    return [SUITES[n]() for n in names]
