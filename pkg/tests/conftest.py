from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from fibalg.scalars import GoldenScalar

settings.register_profile("default", max_examples=100, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def naive_fib(n):
    """Reference Fibonacci: walk the recurrence from (f_0, f_1) in either direction."""
    a, b = 0, 1  # f_0, f_1
    if n >= 0:
        for _ in range(n):
            a, b = b, a + b
        return a
    for _ in range(-n):
        a, b = b - a, a  # (f_{i-1}, f_i)
    return a


fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)
small_ints = st.integers(min_value=-6, max_value=6)
golden = st.builds(GoldenScalar, fractions, fractions)
nonzero_golden = golden.filter(bool)


def vectors(dim, elements=fractions):
    return st.lists(elements, min_size=dim, max_size=dim).map(tuple)


@pytest.fixture
def half():
    return Fraction(1, 2)


# -- one summary line per acceptance criterion ------------------------------

_criteria: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    _criteria[number] = (title, call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}")
