"""Exact Fibonacci elements over finite-dimensional algebras, with verification suites."""

from .algebra import (
    AlgebraElement,
    AlgebraSpec,
    classify_division,
    conjugate,
    elem_mul,
    make_custom_algebra,
    make_generalized_octonion,
    make_generalized_quaternion,
    quadratic_identity_check,
    trace_norm,
)
from .cross import ImaginaryVector, cross3, cross7, dot, gram_det, mixed
from .elements import binet_element, fib_element
from .fibnum import fib
from .report import VerificationReport
from .scalars import PHI, PSI, GoldenScalar, golden_power

__all__ = [
    "AlgebraElement",
    "AlgebraSpec",
    "GoldenScalar",
    "ImaginaryVector",
    "PHI",
    "PSI",
    "VerificationReport",
    "binet_element",
    "classify_division",
    "conjugate",
    "cross3",
    "cross7",
    "dot",
    "elem_mul",
    "fib",
    "fib_element",
    "golden_power",
    "gram_det",
    "make_custom_algebra",
    "make_generalized_octonion",
    "make_generalized_quaternion",
    "mixed",
    "quadratic_identity_check",
    "trace_norm",
]
