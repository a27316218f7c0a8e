"""Verification suites: sweeps of the identity checks over configured ranges and algebras."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import algebra as alg
from .algebra import AlgebraSpec
from .cross import ImaginaryVector, cross, cross3, cross_axioms_check, dot, unit_vector
from .elements import (
    binet_check,
    cassini_check,
    check_recurrence_and_sum,
    generating_series_check,
    negative_index_identity_check,
)
from .errors import ConsistencyError, InputError
from .fibnum import (
    check_classical_cassini,
    check_docagne,
    fib,
    fib_sum,
    johnson_cases,
    koshy_shift_cases,
)
from .report import VerificationReport
from .vectors import CROSS_DIRECTION, fib_cross_closed_form, imaginary_fib_vector, mixed_product_zero_check

SUITES = ("scalar-identities", "algebra-axioms", "fib-elements", "cassini", "cross-axioms", "fib-vectors")

DEFAULT_ALGEBRAS = (
    "quaternion:1,1",
    "quaternion:2,3",
    "quaternion:-1,1",
    "quaternion:1,-2",
    "octonion:1,1,1",
    "octonion:2,1,3",
    "octonion:-1,2,1",
)


@dataclass
class SuiteConfig:
    suite: str = "all"
    m_min: int = -15
    m_max: int = 15
    p_max: int = 200
    k_max: int = 30
    neg_max: int = 100
    series_degree: int = 100
    johnson_max: int = 20
    shift_max: int = 10
    cassini_max: int = 60
    algebras: tuple[AlgebraSpec, ...] = field(default_factory=lambda: tuple(alg.named_algebra(a) for a in DEFAULT_ALGEBRAS))
    random_count: int = 20
    seed: int | None = 0
    elements: int = 500
    pairs: int = 1000
    # (i, j, k, value): structure constant swapped into the Cassini left-hand side only
    corrupt: tuple[int, int, int, Fraction] | None = None
    timing: bool = False
    fmt: str = "json"

    def validate(self) -> None:
        if self.suite != "all" and self.suite not in SUITES:
            raise InputError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES + ('all',))}")
        if self.m_max < self.m_min:
            raise InputError(f"empty m range {self.m_min}..{self.m_max}")
        for name in ("p_max", "k_max", "neg_max", "johnson_max", "shift_max", "cassini_max", "elements", "pairs", "random_count"):
            if getattr(self, name) < 0:
                raise InputError(f"{name.replace('_', '-')} must be >= 0")
        if self.series_degree < 2:
            raise InputError("series-degree must be >= 2")
        if self.random_count > 0 and self.seed is None:
            raise InputError("a seed is required when random algebras are requested")
        if self.fmt not in ("json", "text"):
            raise InputError(f"unknown format {self.fmt!r}")

    @property
    def m_range(self) -> range:
        return range(self.m_min, self.m_max + 1)

    def all_algebras(self) -> list[AlgebraSpec]:
        out = list(self.algebras)
        if self.random_count:
            out += alg.random_algebras(self.random_count, self.seed)
        return out

    def rng(self, salt: str) -> random.Random:
        # independent, reproducible stream per suite
        return random.Random(f"{self.seed}:{salt}")


def _random_rational(rng: random.Random, bound: int = 20) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 9))


def run_scalar_identities(cfg: SuiteConfig, report: VerificationReport) -> None:
    for n in range(-100, 101):
        report.record("fib_recurrence", {"n": n}, fib(n), fib(n - 1) + fib(n - 2))
    for m in range(0, 101):
        report.record("fib_negation", {"m": m}, fib(-m), (-1) ** (m + 1) * fib(m))
    for p in range(cfg.p_max + 1):
        report.record("fib_sum", {"p": p}, fib_sum(p), fib(p + 2) - 1)
    K = cfg.k_max
    for m in range(-K, K + 1):
        for n in range(-K, K + 1):
            ok, lhs, rhs = check_docagne(m, n)
            report.record("docagne", {"m": m, "n": n}, lhs, rhs, ok)
    report.tally("johnson", "abcdr", johnson_cases(cfg.johnson_max, cfg.shift_max))
    report.tally("koshy_shift", "ijk", koshy_shift_cases(K))
    C = cfg.cassini_max
    for m in range(-C, C + 1):
        ok, lhs, rhs = check_classical_cassini(m)
        report.record("classical_cassini", {"m": m}, lhs, rhs, ok)


def _random_element(rng: random.Random, spec: AlgebraSpec) -> alg.AlgebraElement:
    return spec.element(_random_rational(rng) for _ in range(spec.dim))


def run_algebra_axioms(cfg: SuiteConfig, report: VerificationReport) -> None:
    rng = cfg.rng("algebra-axioms")
    for spec in cfg.all_algebras():
        for _ in range(min(cfg.elements, 50)):
            x = _random_element(rng, spec)
            one = spec.one()
            report.record("unit_left", {"algebra": spec.label, "x": x}, one * x, x)
            report.record("unit_right", {"algebra": spec.label, "x": x}, x * one, x)
    for spec in cfg.algebras:
        label = spec.label
        if spec.params is not None and spec.params.kind == alg.QUATERNION:
            bad = set(alg.associativity_failures(spec))
            for t in [(a, b, c) for a in range(4) for b in range(4) for c in range(4)]:
                report.record("quaternion_associative", {"algebra": label, "triple": t}, t not in bad, True)
        if spec.params is not None and spec.params.kind == alg.OCTONION:
            e = spec.basis
            lhs, rhs = (e(1) * e(2)) * e(4), e(1) * (e(2) * e(4))
            report.record("octonion_nonassociative", {"algebra": label}, lhs, rhs, ok=lhs != rhs)
        if spec.signature is None or spec.params is None:
            continue
        for _ in range(cfg.elements):
            x = _random_element(rng, spec)
            inputs = {"algebra": label, "x": x}
            t, n = alg.trace_norm(x)
            report.record("norm_product", inputs, x * alg.conjugate(x), spec.scalar(n))
            report.record("trace_sum", inputs, x + alg.conjugate(x), spec.scalar(t))
            ok, residual = alg.quadratic_identity_check(x)
            report.record("quadratic_identity", inputs, residual, spec.zero(), ok)
        kind = alg.classify_division(spec)
        witness = alg.isotropic_witness(spec)
        report.record("classify_division", {"algebra": label}, kind == alg.SPLIT, witness is not None)
        if witness is not None:
            report.record("isotropic_witness", {"algebra": label, "squared": witness.squared}, witness.norm_value(spec), 0)
        else:
            for _ in range(100):
                x = _random_element(rng, spec)
                if x.is_zero():
                    continue
                _, n = alg.trace_norm(x)
                report.record("anisotropic_sample", {"algebra": label, "x": x}, n > 0, True)


def run_fib_elements(cfg: SuiteConfig, report: VerificationReport) -> None:
    for spec in cfg.all_algebras():
        check_recurrence_and_sum(spec, cfg.m_range, cfg.p_max, report)
        for m in cfg.m_range:
            binet_check(spec, m, report)
        generating_series_check(spec, cfg.series_degree, report)
        for m in range(cfg.neg_max + 1):
            negative_index_identity_check(spec, m, report)


def run_cassini(cfg: SuiteConfig, report: VerificationReport) -> None:
    for spec in cfg.all_algebras():
        lhs_spec = None
        if cfg.corrupt is not None:
            i, j, k, value = cfg.corrupt
            if max(i, j, k) < spec.dim:
                lhs_spec = spec.with_constant(i, j, k, value)
        for m in cfg.m_range:
            cassini_check(spec, m, report, lhs_spec=lhs_spec)


def run_cross_axioms(cfg: SuiteConfig, report: VerificationReport) -> None:
    rng = cfg.rng("cross-axioms")
    for dim in (3, 7):
        for i in range(1, dim + 1):
            for j in range(1, dim + 1):
                cross_axioms_check(unit_vector(dim, i), unit_vector(dim, j), report)
        for _ in range(cfg.pairs):
            x = ImaginaryVector(tuple(_random_rational(rng) for _ in range(dim)))
            y = ImaginaryVector(tuple(_random_rational(rng) for _ in range(dim)))
            # cross3 raises ConsistencyError if its two backends disagree
            cross_axioms_check(x, y, report)
            report.record("antisymmetry", {"dim": dim, "x": x.coords, "y": y.coords},
                          cross(x, y), cross(y, x).scale(-1))
    report.record("cross3_basis", {"x": "i1", "y": "i2"}, cross3(unit_vector(3, 1), unit_vector(3, 2)), unit_vector(3, 3))


def run_fib_vectors(cfg: SuiteConfig, report: VerificationReport) -> None:
    K = cfg.k_max
    for dim in (3, 7):
        for k in range(K + 1):
            for m in range(K + 1):
                fib_cross_closed_form(k, m, dim, report)
        for k in range(K + 1):
            for m in range(K + 1):
                for n in range(K + 1):
                    mixed_product_zero_check(k, m, n, dim, report)
        direction = ImaginaryVector(CROSS_DIRECTION[dim])
        for n in range(-K, K + 1):
            report.record("direction_orthogonal", {"dim": dim, "n": n}, dot(direction, imaginary_fib_vector(n, dim).vec), 0)


RUNNERS: dict[str, Callable[[SuiteConfig, VerificationReport], None]] = {
    "scalar-identities": run_scalar_identities,
    "algebra-axioms": run_algebra_axioms,
    "fib-elements": run_fib_elements,
    "cassini": run_cassini,
    "cross-axioms": run_cross_axioms,
    "fib-vectors": run_fib_vectors,
}


def run_suite(name: str, cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport(name)
    start = time.perf_counter()
    try:
        RUNNERS[name](cfg, report)
    except ConsistencyError as exc:
        # two evaluation routes disagreed: abort this suite and surface it as a failure
        report.add_failure("internal_consistency", {"suite": name}, str(exc), "consistent")
    if cfg.timing:
        report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


def run(cfg: SuiteConfig) -> VerificationReport:
    cfg.validate()
    if cfg.suite != "all":
        return run_suite(cfg.suite, cfg)
    top = VerificationReport("all")
    for name in SUITES:
        part = run_suite(name, cfg)
        top.parts.append(part)
        top.merge(part)
    return top
