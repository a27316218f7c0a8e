"""Integer Fibonacci numbers on all of Z, and the product identities used downstream.

Every ``check_*`` function evaluates both sides of its identity exactly and hands
them back together with the verdict, so a failing tuple can be reported as-is.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, NamedTuple

from .errors import InputError


class IdentityCheck(NamedTuple):
    ok: bool
    lhs: int
    rhs: int


def _sign(n: int) -> int:
    """(-1)**n for any integer n."""
    return -1 if n & 1 else 1


def _fib_pair(n: int) -> tuple[int, int]:
    # fast doubling: returns (f_n, f_{n+1}) for n >= 0
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return d, c + d
    return c, d


@lru_cache(maxsize=4096)
def fib(n: int) -> int:
    """f_n for any integer n, with f_{-m} = (-1)**(m+1) f_m."""
    if n < 0:
        return _sign(-n + 1) * _fib_pair(-n)[0]
    return _fib_pair(n)[0]


def fib_range(lo: int, hi: int) -> list[int]:
    """[f_lo, ..., f_hi] by running the recurrence from a single fast-doubling seed."""
    if hi < lo:
        return []
    a, b = fib(lo), fib(lo + 1)
    out = []
    for _ in range(hi - lo + 1):
        out.append(a)
        a, b = b, a + b
    return out


def fib_sum(p: int) -> int:
    if p < 0:
        raise InputError(f"fib_sum needs p >= 0, got {p}")
    total = sum(fib_range(1, p))
    assert total == fib(p + 2) - 1, p
    return total


def check_docagne(m: int, n: int) -> IdentityCheck:
    """f_m f_{n+1} - f_n f_{m+1} == (-1)**n f_{m-n}."""
    lhs = fib(m) * fib(n + 1) - fib(n) * fib(m + 1)
    rhs = _sign(n) * fib(m - n)
    return IdentityCheck(lhs == rhs, lhs, rhs)


def check_johnson(a: int, b: int, c: int, d: int, r: int) -> IdentityCheck:
    """f_a f_b - f_c f_d == (-1)**r (f_{a-r} f_{b-r} - f_{c-r} f_{d-r}), given a+b == c+d."""
    if a + b != c + d:
        raise InputError(f"Johnson's identity needs a+b == c+d, got {a}+{b} != {c}+{d}")
    lhs = fib(a) * fib(b) - fib(c) * fib(d)
    rhs = _sign(r) * (fib(a - r) * fib(b - r) - fib(c - r) * fib(d - r))
    return IdentityCheck(lhs == rhs, lhs, rhs)


def check_koshy_shift(i: int, j: int, k: int) -> IdentityCheck:
    """f_i f_j - f_{i+k} f_{j-k} == (-1)**(j-k) f_{i+k-j} f_k."""
    lhs = fib(i) * fib(j) - fib(i + k) * fib(j - k)
    rhs = _sign(j - k) * fib(i + k - j) * fib(k)
    return IdentityCheck(lhs == rhs, lhs, rhs)


def johnson_cases(max_index: int, max_shift: int) -> Iterator[tuple[tuple[int, ...], IdentityCheck]]:
    """Every (a, b, c, d, r) with a+b == c+d, |a|..|d| <= max_index, |r| <= max_shift.

    Same values as :func:`check_johnson`, read from a precomputed table.
    """
    J, R = max_index, max_shift
    off = J + R
    f = fib_range(-off, off)
    for a in range(-J, J + 1):
        for b in range(-J, J + 1):
            for c in range(-J, J + 1):
                d = a + b - c
                if not -J <= d <= J:
                    continue
                lhs = f[a + off] * f[b + off] - f[c + off] * f[d + off]
                for r in range(-R, R + 1):
                    o = off - r
                    rhs = _sign(r) * (f[a + o] * f[b + o] - f[c + o] * f[d + o])
                    yield (a, b, c, d, r), IdentityCheck(lhs == rhs, lhs, rhs)


def koshy_shift_cases(bound: int) -> Iterator[tuple[tuple[int, ...], IdentityCheck]]:
    """:func:`check_koshy_shift` over the cube |i|, |j|, |k| <= bound."""
    off = 3 * bound
    f = fib_range(-off, off)
    for i in range(-bound, bound + 1):
        for j in range(-bound, bound + 1):
            for k in range(-bound, bound + 1):
                lhs = f[i + off] * f[j + off] - f[i + k + off] * f[j - k + off]
                rhs = _sign(j - k) * f[i + k - j + off] * f[k + off]
                yield (i, j, k), IdentityCheck(lhs == rhs, lhs, rhs)


def check_classical_cassini(m: int) -> IdentityCheck:
    lhs = fib(m + 1) * fib(m - 1) - fib(m) ** 2
    rhs = _sign(m)
    return IdentityCheck(lhs == rhs, lhs, rhs)
