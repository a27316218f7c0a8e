"""Binary cross products on R^3 and R^7 with exact coordinates.

The 3D product has two independent backends (cofactor expansion and the imaginary
part of a quaternion product in H(1,1)) which must agree on every call. The 7D
product is the coordinate formula with the index triples
(1,2,4), (2,3,5), (3,4,6), (4,5,7), (5,6,1), (6,7,2), (7,1,3); it uses its own
basis convention and is deliberately not tied to the octonion table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

from .algebra import AlgebraSpec, make_generalized_quaternion
from .errors import ConsistencyError, InputError
from .report import VerificationReport
from .scalars import as_fraction

CROSS_DIMS = (3, 7)
# Dimensions admitting a binary cross product; only 3 and 7 are non-degenerate.
ADMISSIBLE_DIMS = (0, 1, 3, 7)


@dataclass(frozen=True)
class ImaginaryVector:
    coords: tuple

    def __post_init__(self) -> None:
        if len(self.coords) not in CROSS_DIMS:
            raise InputError(f"cross products exist only in dims {CROSS_DIMS}, got {len(self.coords)}")

    @classmethod
    def of(cls, *coords) -> ImaginaryVector:
        return cls(tuple(coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __add__(self, other: ImaginaryVector) -> ImaginaryVector:
        _same_dim(self, other)
        return ImaginaryVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: ImaginaryVector) -> ImaginaryVector:
        _same_dim(self, other)
        return ImaginaryVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> ImaginaryVector:
        return ImaginaryVector(tuple(-a for a in self.coords))

    def scale(self, s) -> ImaginaryVector:
        return ImaginaryVector(tuple(s * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.coords) + ")"


def unit_vector(dim: int, i: int) -> ImaginaryVector:
    """The i-th basis vector, 1-based like e_1..e_7."""
    coords = [0] * dim
    coords[i - 1] = 1
    return ImaginaryVector(tuple(coords))


def _same_dim(x: ImaginaryVector, y: ImaginaryVector) -> None:
    if x.dim != y.dim:
        raise InputError(f"dimension mismatch: {x.dim} vs {y.dim}")


def dot(x: ImaginaryVector, y: ImaginaryVector):
    _same_dim(x, y)
    return sum(a * b for a, b in zip(x.coords, y.coords))


def _cross3_det(x: ImaginaryVector, y: ImaginaryVector) -> tuple:
    x1, x2, x3 = x.coords
    y1, y2, y3 = y.coords
    return (x2 * y3 - x3 * y2, x3 * y1 - x1 * y3, x1 * y2 - x2 * y1)


@lru_cache(maxsize=1)
def _hamilton() -> AlgebraSpec:
    return make_generalized_quaternion(1, 1)


def _cross3_quaternion(x: ImaginaryVector, y: ImaginaryVector) -> tuple:
    # x y = -<x,y> + x cross y for pure quaternions; adding <x,y> leaves the cross product
    H = _hamilton()
    prod = H.element((0,) + x.coords) * H.element((0,) + y.coords)
    if prod.coords[0] + dot(x, y) != 0:
        raise ConsistencyError(f"scalar part of {x}*{y} is not -<x,y>")
    return prod.coords[1:]


def cross3(x: ImaginaryVector, y: ImaginaryVector) -> ImaginaryVector:
    if x.dim != 3 or y.dim != 3:
        raise InputError("cross3 needs two 3-vectors")
    det = _cross3_det(x, y)
    quat = _cross3_quaternion(x, y)
    if det != tuple(quat):
        raise ConsistencyError(f"cross3 backends disagree on {x} x {y}: {det} vs {tuple(quat)}")
    return ImaginaryVector(det)


# (i, j, k): e_i x e_j = e_k, 1-based
CROSS7_TRIPLES = ((1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3))


def cross7(x: ImaginaryVector, y: ImaginaryVector) -> ImaginaryVector:
    if x.dim != 7 or y.dim != 7:
        raise InputError("cross7 needs two 7-vectors")
    x1, x2, x3, x4, x5, x6, x7 = x.coords
    y1, y2, y3, y4, y5, y6, y7 = y.coords
    return ImaginaryVector((
        x2 * y4 - x4 * y2 + x3 * y7 - x7 * y3 + x5 * y6 - x6 * y5,
        x3 * y5 - x5 * y3 + x4 * y1 - x1 * y4 + x6 * y7 - x7 * y6,
        x4 * y6 - x6 * y4 + x5 * y2 - x2 * y5 + x7 * y1 - x1 * y7,
        x5 * y7 - x7 * y5 + x6 * y3 - x3 * y6 + x1 * y2 - x2 * y1,
        x6 * y1 - x1 * y6 + x7 * y4 - x4 * y7 + x2 * y3 - x3 * y2,
        x7 * y2 - x2 * y7 + x1 * y5 - x5 * y1 + x3 * y4 - x4 * y3,
        x1 * y3 - x3 * y1 + x2 * y6 - x6 * y2 + x4 * y5 - x5 * y4,
    ))


def cross(x: ImaginaryVector, y: ImaginaryVector) -> ImaginaryVector:
    _same_dim(x, y)
    return cross3(x, y) if x.dim == 3 else cross7(x, y)


def mixed(x: ImaginaryVector, y: ImaginaryVector, z: ImaginaryVector):
    """<x cross y, z>."""
    _same_dim(x, z)
    return dot(cross(x, y), z)


def bareiss_det(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square rational matrix by fraction-free elimination.

    Rows are first scaled to integers by their denominators' lcm, so every
    intermediate stays an integer and each division is exact.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise InputError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    scale = 1
    if all(type(c) is int for row in rows for c in row):
        M = [list(row) for row in rows]
    else:
        M = []
        for row in rows:
            row = [as_fraction(c) for c in row]
            L = lcm(*(c.denominator for c in row))
            M.append([int(c * L) for c in row])
            scale *= L
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pivot = M[k][k]
        for i in range(k + 1, n):
            Mi, Mk = M[i], M[k]
            for j in range(k + 1, n):
                Mi[j] = (Mi[j] * pivot - Mi[k] * Mk[j]) // prev
            Mi[k] = 0
        prev = pivot
    return Fraction(sign * M[n - 1][n - 1], scale)


def gram_matrix(vs: Sequence[ImaginaryVector]) -> list[list]:
    return [[dot(a, b) for b in vs] for a in vs]


def gram_det(vs: Sequence[ImaginaryVector]) -> Fraction:
    if vs and any(v.dim != vs[0].dim for v in vs):
        raise InputError("gram_det needs vectors of one dimension")
    if vs and len(vs) > vs[0].dim:
        raise InputError(f"at most {vs[0].dim} vectors in dimension {vs[0].dim}")
    return bareiss_det(gram_matrix(vs))


def cross_axioms_check(
    x: ImaginaryVector, y: ImaginaryVector, report: VerificationReport | None = None
) -> VerificationReport:
    """Orthogonality of x cross y to x and y, and |x cross y|^2 == det Gram(x, y)."""
    report = report if report is not None else VerificationReport("cross-axioms")
    c = cross(x, y)
    inputs = {"dim": x.dim, "x": x.coords, "y": y.coords}
    report.record("orthogonal_x", inputs, dot(c, x), 0)
    report.record("orthogonal_y", inputs, dot(c, y), 0)
    gram = dot(x, x) * dot(y, y) - dot(x, y) ** 2
    report.record("gram_identity", inputs, dot(c, c), gram)
    return report
