"""Fibonacci elements F_m = sum_k f_{m+k} e_k over an arbitrary algebra, and checks
of their recurrence, sum, Binet, generating-function, negative-index and Cassini
identities.

Each ``*_check`` takes an optional report to record into, so suites can sweep
ranges without allocating one report per case.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import AlgebraElement, AlgebraSpec
from .errors import ConsistencyError, InputError
from .fibnum import fib, fib_range
from .report import VerificationReport
from .scalars import PHI, PSI, GoldenScalar, golden_power


@dataclass(frozen=True)
class FibonacciElement:
    element: AlgebraElement
    index: int

    @property
    def coords(self) -> tuple:
        return self.element.coords


def fib_element(spec: AlgebraSpec, m: int) -> FibonacciElement:
    return FibonacciElement(AlgebraElement(spec, tuple(fib_range(m, m + spec.dim - 1))), m)


def _F(spec: AlgebraSpec, m: int) -> AlgebraElement:
    return fib_element(spec, m).element


def _report(report: VerificationReport | None, name: str) -> VerificationReport:
    return report if report is not None else VerificationReport(name)


def check_recurrence_and_sum(
    spec: AlgebraSpec, m_range: Iterable[int], p_max: int, report: VerificationReport | None = None
) -> VerificationReport:
    """F_{m+2} = F_{m+1} + F_m over ``m_range``; for p <= p_max both
    sum_{i=1}^p F_i = F_{p+2} - F_2 and sum_{i=0}^p F_i = F_{p+2} - F_1."""
    report = _report(report, "recurrence-and-sum")
    for m in m_range:
        lhs = _F(spec, m + 2)
        report.record("recurrence", {"algebra": spec.label, "m": m}, lhs, _F(spec, m + 1) + _F(spec, m))
    f0, f1, f2 = _F(spec, 0), _F(spec, 1), _F(spec, 2)
    running = spec.zero()  # sum_{i=1}^p F_i
    nxt = f1
    for p in range(0, p_max + 1):
        if p >= 1:
            running = running + nxt
            nxt = _F(spec, p + 1)
        top = _F(spec, p + 2)
        report.record("sum_from_1", {"algebra": spec.label, "p": p}, running, top - f2)
        report.record("sum_from_0", {"algebra": spec.label, "p": p}, running + f0, top - f1)
    return report


def golden_star(spec: AlgebraSpec, root: GoldenScalar) -> AlgebraElement:
    """sum_k root^k e_k."""
    powers = []
    acc = GoldenScalar(1)
    for _ in range(spec.dim):
        powers.append(acc)
        acc = acc * root
    return AlgebraElement(spec, tuple(powers))


def binet_element(spec: AlgebraSpec, m: int, check: bool = True) -> AlgebraElement:
    """(phi* phi^m - psi* psi^m) / (phi - psi), evaluated in Q(sqrt 5).

    With ``check`` the result must be rational in every coordinate and match
    :func:`fib_element`; otherwise :class:`ConsistencyError` is raised.
    """
    result = (
        golden_star(spec, PHI).scale(golden_power(PHI, m))
        - golden_star(spec, PSI).scale(golden_power(PSI, m))
    ) / (PHI - PSI)
    if check:
        expected = fib_element(spec, m).coords
        if any(not c.is_rational for c in result.coords) or tuple(c.a for c in result.coords) != expected:
            raise ConsistencyError(f"{spec.label}: Binet gives {result} at m={m}, expected {expected}")
    return result


def binet_check(spec: AlgebraSpec, m: int, report: VerificationReport | None = None) -> VerificationReport:
    report = _report(report, "binet")
    value = binet_element(spec, m, check=False)
    inputs = {"algebra": spec.label, "m": m}
    report.record("binet_irrational_part", inputs, tuple(c.b for c in value.coords), (0,) * spec.dim)
    report.record("binet", inputs, value, fib_element(spec, m).element)
    return report


@dataclass(frozen=True)
class TruncatedSeries:
    """sum_{m<=degree} coefficients[m] t^m, all in one algebra; arithmetic is mod t^{degree+1}."""

    coefficients: tuple[AlgebraElement, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise InputError("a truncated series needs at least one coefficient")
        spec = self.coefficients[0].spec
        if any(c.spec is not spec and c.spec != spec for c in self.coefficients):
            raise InputError("series coefficients must share one algebra")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def spec(self) -> AlgebraSpec:
        return self.coefficients[0].spec

    def times_scalar_poly(self, poly: Sequence[int]) -> TruncatedSeries:
        """Product with a scalar polynomial given low-order first, truncated to ``degree``."""
        out = []
        for n in range(self.degree + 1):
            acc = self.spec.zero()
            for i, s in enumerate(poly[: n + 1]):
                if s:
                    acc = acc + self.coefficients[n - i].scale(s)
            out.append(acc)
        return TruncatedSeries(tuple(out))


def fibonacci_series(spec: AlgebraSpec, degree: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(_F(spec, m) for m in range(degree + 1)))


def generating_series_check(spec: AlgebraSpec, degree: int, report: VerificationReport | None = None) -> VerificationReport:
    """(sum_{m<=N} F_m t^m)(1 - t - t^2) == F_0 + (F_1 - F_0) t  (mod t^{N+1})."""
    if degree < 2:
        raise InputError(f"series degree must be >= 2, got {degree}")
    report = _report(report, "generating-function")
    product = fibonacci_series(spec, degree).times_scalar_poly((1, -1, -1))
    f0, f1 = _F(spec, 0), _F(spec, 1)
    expected = [f0, f1 - f0] + [spec.zero()] * (degree - 1)
    for n, (got, want) in enumerate(zip(product.coefficients, expected)):
        report.record("generating_function", {"algebra": spec.label, "N": degree, "power": n}, got, want)
    return report


def negative_index_identity_check(spec: AlgebraSpec, m: int, report: VerificationReport | None = None) -> VerificationReport:
    """F_{-m} == (-1)^{m+1} f_m F_1 + (-1)^m f_{m+1} F_0."""
    if m < 0:
        raise InputError(f"m must be >= 0, got {m}")
    report = _report(report, "negative-index")
    sign = -1 if m % 2 else 1
    rhs = _F(spec, 1).scale(-sign * fib(m)) + _F(spec, 0).scale(sign * fib(m + 1))
    report.record("negative_index", {"algebra": spec.label, "m": m}, _F(spec, -m), rhs)
    return report


def cassini_check(
    spec: AlgebraSpec,
    m: int,
    report: VerificationReport | None = None,
    lhs_spec: AlgebraSpec | None = None,
) -> VerificationReport:
    """Both product orders of F_{m-1}F_{m+1} - F_m^2 == (-1)^m (F_{-1}F_1 - F_0^2).

    ``lhs_spec`` evaluates the left-hand products in a different table (a fault
    injection hook; the identity holds for every bilinear table, so a corrupted
    constant is only visible when it affects one side).
    """
    report = _report(report, "cassini")
    sign = -1 if m % 2 else 1
    fneg, fz, f1 = _F(spec, -1), _F(spec, 0), _F(spec, 1)
    rhs_fwd = (fneg * f1 - fz * fz).scale(sign)
    rhs_rev = (f1 * fneg - fz * fz).scale(sign)
    ls = lhs_spec or spec
    a, b, c = _F(ls, m - 1), _F(ls, m), _F(ls, m + 1)
    lhs_fwd = a * c - b * b
    lhs_rev = c * a - b * b
    # one case per m; each failing order is reported separately
    report.cases += 1
    inputs = {"algebra": spec.label, "m": m}
    if lhs_fwd.coords != rhs_fwd.coords:
        report.add_failure("cassini", inputs, lhs_fwd, rhs_fwd)
    if lhs_rev.coords != rhs_rev.coords:
        report.add_failure("cassini_reversed", inputs, lhs_rev, rhs_rev)
    return report
