import math
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from landen import Quadratic

_CRITERIA = {}


@st.composite
def exact_quadratics(draw, denom=100, hi=10):
    """Rational quadratics on a k/denom grid with a, c in (0, hi]."""
    top = hi * denom
    big_a = draw(st.integers(1, top))
    big_c = draw(st.integers(1, top))
    m = math.isqrt(4 * big_a * big_c - 1)
    big_b = draw(st.integers(-m, m))
    return Quadratic(Fraction(big_a, denom), Fraction(big_b, denom), Fraction(big_c, denom))


@st.composite
def float_quadratics(draw, hi=10.0):
    a = draw(st.floats(1e-3, hi))
    c = draw(st.floats(1e-3, hi))
    frac = draw(st.floats(-0.999, 0.999))
    return Quadratic(a, frac * 2.0 * math.sqrt(a * c), c)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not rep.failed:
        return
    key = (mark.args[0], mark.args[1])
    ok = rep.passed if rep.when == "call" else False
    prev = _CRITERIA.get(key, True)
    _CRITERIA[key] = prev and ok


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), ok in sorted(_CRITERIA.items(), key=lambda kv: str(kv[0][0]).zfill(4)):
        terminalreporter.write_line(f"criterion {num:>4}  {'PASS' if ok else 'FAIL'}  {title}")
