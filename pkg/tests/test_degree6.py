import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from landen import Degree6Denominator, InvalidInputError, iterate6, step6
from landen.degree6 import denominator_positive


def test_fixed_point_exact():
    s = step6(Degree6Denominator(3.0, 3.0))
    assert (s.a, s.b) == (3.0, 3.0)


def test_step_from_origin():
    s = step6(Degree6Denominator(0.0, 0.0))
    assert s.a == pytest.approx(9 / 2 ** (4 / 3), rel=1e-15)
    assert s.b == pytest.approx(6 / 2 ** (2 / 3), rel=1e-15)
    assert s.a == pytest.approx(3.5716524, abs=1e-7)
    assert s.b == pytest.approx(3.7797631, abs=1e-7)


def test_step_from_ones():
    s = step6(Degree6Denominator(1.0, 1.0))
    assert s.a == pytest.approx(20 / 4 ** (4 / 3), rel=1e-15)
    assert s.b == pytest.approx(8 / 4 ** (2 / 3), rel=1e-15)
    assert (s.a, s.b) == pytest.approx((3.1498, 3.1748), abs=1e-4)


@pytest.mark.parametrize("ab", [(-1.0, -1.0), (-3.0, 0.5), (-2.0, 0.0)])
def test_invalid_region(ab):
    with pytest.raises(InvalidInputError):
        Degree6Denominator(*ab)


@pytest.mark.parametrize("start", [(0.0, 0.0), (1.0, 1.0), (10.0, 10.0)])
def test_iterate_converges(start):
    ok, tr = iterate6(Degree6Denominator(*start), tol=1e-10)
    assert ok and tr.steps <= 25
    end = tr[-1].state
    assert abs(end.a - 3) + abs(end.b - 3) <= 1e-10


def test_iterate_already_converged():
    ok, tr = iterate6(Degree6Denominator(3.0, 3.0))
    assert ok and tr.steps == 0


def test_iterate_reports_max_iter():
    ok, tr = iterate6(Degree6Denominator(0.0, 0.0), tol=1e-10, max_iter=1)
    assert not ok and tr.steps == 1


def _positive_by_scan(a, b):
    x = np.linspace(0, 4, 40001)
    return bool(np.all(((x * x + a) * x * x + b) * x * x + 1 > 0))


@pytest.mark.parametrize(
    "ab", [(0, 0), (1, 1), (10, 10), (-1, 0.5), (-3, 1), (-2, -1), (5, -3), (-1.5, -0.5)]
)
def test_denominator_positive_against_scan(ab):
    assert denominator_positive(*ab) == _positive_by_scan(*ab)


@settings(max_examples=100, deadline=None)
@given(st.floats(-1.0, 20.0), st.floats(-1.0, 20.0))
def test_converges_on_positive_denominators(a, b):
    assume(a + b + 2 > 0.5 and denominator_positive(a, b))
    # stay clear of the boundary where convergence slows down
    assume(min(np.polyval([1, a, b, 1], np.linspace(0, 5, 501))) > 0.05)
    ok, _ = iterate6(Degree6Denominator(a, b), tol=1e-10, max_iter=25)
    assert ok


def test_order_near_fixed_point():
    from landen import convergence_order

    _, tr = iterate6(Degree6Denominator(0.0, 0.0), tol=1e-12)
    assert 1.5 < convergence_order(tr) < 3.5
