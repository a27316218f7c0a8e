import pytest
from hypothesis import given, strategies as st

from fibalg.errors import InputError
from fibalg.fibnum import (
    check_classical_cassini,
    check_docagne,
    check_johnson,
    check_koshy_shift,
    fib,
    fib_range,
    fib_sum,
    johnson_cases,
    koshy_shift_cases,
)

from conftest import naive_fib


def test_fib_matches_reference_on_a_wide_range():
    for n in range(-300, 301):
        assert fib(n) == naive_fib(n), n


@pytest.mark.parametrize("n, expected", [(0, 0), (1, 1), (10, 55), (-4, -3), (-1, 1), (-2, -1)])
def test_fib_values(n, expected):
    assert fib(n) == expected


def test_fib_large_index_is_exact():
    assert fib(1000) == naive_fib(1000)
    assert fib(1000) % 10**10 == 6849228875  # frozen from naive_fib(1000)
    assert fib(-1000) == -fib(1000)


def test_fib_range_agrees_with_fib():
    assert fib_range(-5, 5) == [fib(n) for n in range(-5, 6)]
    assert fib_range(3, 2) == []


def test_recurrence_and_negation():
    for n in range(-100, 101):
        assert fib(n) == fib(n - 1) + fib(n - 2)
    for m in range(0, 101):
        assert fib(-m) == (-1) ** (m + 1) * fib(m)


@pytest.mark.parametrize("p, expected", [(0, 0), (1, 1), (5, 12)])
def test_fib_sum(p, expected):
    assert fib_sum(p) == expected == sum(naive_fib(i) for i in range(1, p + 1))


def test_fib_sum_rejects_negative():
    with pytest.raises(InputError):
        fib_sum(-1)


def test_docagne_examples():
    assert check_docagne(5, 2) == (True, 2, 2)
    assert check_docagne(3, 1) == (True, -1, -1)
    assert check_docagne(7, 7) == (True, 0, 0)


def test_docagne_exhaustive():
    bad = [(m, n) for m in range(-30, 31) for n in range(-30, 31) if not check_docagne(m, n).ok]
    assert bad == []


def test_johnson_examples():
    assert check_johnson(4, 2, 3, 3, 1) == (True, -1, -1)
    ok, lhs, rhs = check_johnson(9, -4, 2, 3, 0)
    assert ok and lhs == rhs
    assert check_johnson(6, 1, 6, 1, 3) == (True, 0, 0)


def test_johnson_rejects_unbalanced_indices():
    with pytest.raises(InputError, match="a\\+b == c\\+d"):
        check_johnson(1, 2, 3, 4, 0)


@given(st.integers(-40, 40), st.integers(-40, 40), st.integers(-40, 40), st.integers(-15, 15))
def test_johnson_property(a, b, c, r):
    assert check_johnson(a, b, c, a + b - c, r).ok


def test_koshy_examples():
    # both sides equal 1: f_1 f_4 - f_3 f_2 = 3 - 2, and f_{-1} f_2 = 1
    assert check_koshy_shift(1, 4, 2) == (True, 1, 1)
    assert check_koshy_shift(5, 8, 0) == (True, 0, 0)
    assert check_koshy_shift(2, 4, 2) == (True, 0, 0)


def test_koshy_exhaustive_against_reference():
    f = naive_fib
    for i in range(-30, 31):
        for j in range(-30, 31):
            for k in range(-30, 31, 3):
                ok, lhs, rhs = check_koshy_shift(i, j, k)
                assert ok, (i, j, k)
                assert lhs == f(i) * f(j) - f(i + k) * f(j - k)


def test_classical_cassini():
    for m in range(-60, 61):
        ok, lhs, rhs = check_classical_cassini(m)
        assert ok and lhs == (-1) ** m


def test_johnson_sweep_matches_single_checks():
    cases = dict(johnson_cases(6, 4))
    assert len(cases) == sum(1 for a in range(-6, 7) for b in range(-6, 7) for c in range(-6, 7)
                             if -6 <= a + b - c <= 6) * 9
    for (a, b, c, d, r), got in cases.items():
        assert got == check_johnson(a, b, c, d, r)


def test_koshy_sweep_matches_single_checks():
    cases = dict(koshy_shift_cases(7))
    assert len(cases) == 15 ** 3
    for (i, j, k), got in cases.items():
        assert got == check_koshy_shift(i, j, k)
