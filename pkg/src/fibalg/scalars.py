"""Exact scalars: Python ints, normalized fractions, and the field Q(sqrt 5).

Integers are plain ``int`` (arbitrary precision, canonical zero) and rationals are
:class:`fractions.Fraction`, which already keeps ``gcd(num, den) == 1`` and
``den > 0``. :class:`GoldenScalar` is the quadratic extension needed to write the
golden ratio and its conjugate exactly.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ExactDivisionError, InputError

Rational = Union[int, Fraction]

_RATIONAL_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def as_fraction(x: Rational | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InputError(f"not an exact rational: {x!r}")
    if isinstance(x, (int, str)):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not an exact rational: {x!r}") from exc
    raise InputError(f"not an exact rational: {x!r}")


def rational_arith(x: Rational, y: Rational, op: str) -> Fraction:
    """Apply ``op`` (add, sub, mul, div) to two rationals, returning a reduced Fraction."""
    try:
        fn = _RATIONAL_OPS[op]
    except KeyError:
        raise InputError(f"unknown rational op {op!r}") from None
    x, y = as_fraction(x), as_fraction(y)
    if op == "div" and y == 0:
        raise ExactDivisionError(f"{x} / 0")
    return fn(x, y)


def int_to_str(n: int) -> str:
    return str(int(n))


def rational_to_str(x: Rational) -> str:
    # "p/q", or just "p" when the value is integral
    return str(as_fraction(x))


def parse_rational(text: str) -> Fraction:
    return as_fraction(text.strip())


@dataclass(frozen=True)
class GoldenScalar:
    """The number ``a + b*sqrt(5)`` with rational ``a`` and ``b``."""

    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))

    @classmethod
    def coerce(cls, x: GoldenScalar | Rational) -> GoldenScalar:
        if isinstance(x, GoldenScalar):
            return x
        return cls(as_fraction(x))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def conj(self) -> GoldenScalar:
        return GoldenScalar(self.a, -self.b)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - 5 b^2``; zero only at zero since sqrt 5 is irrational."""
        return self.a * self.a - 5 * self.b * self.b

    def inverse(self) -> GoldenScalar:
        n = self.norm()
        if n == 0:
            raise ExactDivisionError("inverse of zero in Q(sqrt 5)")
        return GoldenScalar(self.a / n, -self.b / n)

    def __add__(self, other):
        if not isinstance(other, (GoldenScalar, int, Fraction)):
            return NotImplemented
        o = GoldenScalar.coerce(other)
        return GoldenScalar(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> GoldenScalar:
        return GoldenScalar(-self.a, -self.b)

    def __sub__(self, other):
        if not isinstance(other, (GoldenScalar, int, Fraction)):
            return NotImplemented
        o = GoldenScalar.coerce(other)
        return GoldenScalar(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return GoldenScalar.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GoldenScalar(self.a * other, self.b * other)
        if not isinstance(other, GoldenScalar):
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        return GoldenScalar(a * c + 5 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (GoldenScalar, int, Fraction)):
            return NotImplemented
        o = GoldenScalar.coerce(other)
        if o.a == 0 and o.b == 0:
            raise ExactDivisionError(f"({self}) / 0")
        return self * o.inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return GoldenScalar.coerce(other) / self

    def __pow__(self, m: int) -> GoldenScalar:
        return golden_power(self, m)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, GoldenScalar):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def to_pair(self) -> list[str]:
        return [rational_to_str(self.a), rational_to_str(self.b)]

    @classmethod
    def from_pair(cls, pair) -> GoldenScalar:
        a, b = pair
        return cls(parse_rational(a), parse_rational(b))

    def __str__(self) -> str:
        if self.b == 0:
            return rational_to_str(self.a)
        sign = "-" if self.b < 0 else "+"
        return f"{rational_to_str(self.a)}{sign}{rational_to_str(abs(self.b))}√5"

    def __repr__(self) -> str:
        return f"GoldenScalar({rational_to_str(self.a)!r}, {rational_to_str(self.b)!r})"


SQRT5 = GoldenScalar(0, 1)
PHI = GoldenScalar(Fraction(1, 2), Fraction(1, 2))
PSI = GoldenScalar(Fraction(1, 2), Fraction(-1, 2))

_GOLDEN_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def golden_arith(x: GoldenScalar, y: GoldenScalar | None = None, op: str = "add") -> GoldenScalar:
    """Field operation on Q(sqrt 5). ``conj`` is unary and ignores ``y``."""
    x = GoldenScalar.coerce(x)
    if op == "conj":
        return x.conj()
    try:
        fn = _GOLDEN_OPS[op]
    except KeyError:
        raise InputError(f"unknown golden op {op!r}") from None
    if y is None:
        raise InputError(f"{op} needs two operands")
    return fn(x, GoldenScalar.coerce(y))


def golden_power(x: GoldenScalar, m: int) -> GoldenScalar:
    x = GoldenScalar.coerce(x)
    if m < 0:
        if not x:
            raise ExactDivisionError("zero to a negative power")
        x, m = x.inverse(), -m
    result = GoldenScalar(1)
    while m:
        if m & 1:
            result = result * x
        x = x * x
        m >>= 1
    return result
