"""Imaginary Fibonacci quaternions and octonions, and their cross products.

For consecutive-Fibonacci vectors F_k the cross product collapses to a fixed
direction: F_k x F_m = (-1)^k f_{m-k} d, with d = (1, 1, -1) in 3D and
d = (-3, 2, 7, 0, 4, -9, 3) in 7D. Since d is orthogonal to every F_n, any three
such vectors have zero mixed product.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cross import ImaginaryVector, cross, dot, gram_det
from .errors import InputError
from .fibnum import fib, fib_range
from .report import VerificationReport

CROSS_DIRECTION = {
    3: (1, 1, -1),
    7: (-3, 2, 7, 0, 4, -9, 3),
}


@dataclass(frozen=True)
class FibImaginaryVector:
    base: int
    vec: ImaginaryVector

    @property
    def coords(self) -> tuple:
        return self.vec.coords


def imaginary_fib_vector(n: int, dim: int) -> FibImaginaryVector:
    if dim not in CROSS_DIRECTION:
        raise InputError(f"dim must be 3 or 7, got {dim}")
    return FibImaginaryVector(n, ImaginaryVector(tuple(fib_range(n, n + dim - 1))))


def imaginary_fib_quaternion(n: int) -> FibImaginaryVector:
    return imaginary_fib_vector(n, 3)


def imaginary_fib_octonion(n: int) -> FibImaginaryVector:
    return imaginary_fib_vector(n, 7)


def closed_form_cross(k: int, m: int, dim: int) -> ImaginaryVector:
    s = (-1 if k % 2 else 1) * fib(m - k)
    return ImaginaryVector(tuple(s * d for d in CROSS_DIRECTION[dim]))


def fib_cross_closed_form(
    k: int, m: int, dim: int, report: VerificationReport | None = None
) -> tuple[ImaginaryVector, VerificationReport]:
    report = report if report is not None else VerificationReport("fib-cross")
    got = cross(imaginary_fib_vector(k, dim).vec, imaginary_fib_vector(m, dim).vec)
    report.record("fib_cross_closed_form", {"dim": dim, "k": k, "m": m}, got, closed_form_cross(k, m, dim))
    return got, report


def mixed_product_zero_check(
    k: int, m: int, n: int, dim: int, report: VerificationReport | None = None
) -> VerificationReport:
    """<F_k x F_m, F_n> == 0; in 3D also det Gram(F_k, F_m, F_n) == 0."""
    report = report if report is not None else VerificationReport("fib-mixed")
    fk, fm, fn = (imaginary_fib_vector(i, dim).vec for i in (k, m, n))
    inputs = {"dim": dim, "k": k, "m": m, "n": n}
    report.record("mixed_product", inputs, dot(cross(fk, fm), fn), 0)
    if dim == 3:
        report.record("gram_det", inputs, gram_det([fk, fm, fn]), 0)
    return report
