"""Finite-dimensional unital algebras given by structure constants.

An algebra of dimension ``d`` is a dense table ``c[i][j][k]``: the coefficient of
``e_k`` in ``e_i * e_j``. Basis index 0 is the unit. Named constructions carry
their parameters so trace and norm can be evaluated in closed form; custom tables
are accepted as long as ``e_0`` is a two-sided unit.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import isqrt, lcm
from typing import Any, Iterable, Sequence

from .errors import ConsistencyError, InputError, UnsupportedOperation
from .scalars import as_fraction, parse_rational, rational_to_str

QUATERNION = "quaternion"
OCTONION = "octonion"


def _canon(x) -> int | Fraction:
    x = as_fraction(x)
    return x.numerator if x.denominator == 1 else x


@dataclass(frozen=True)
class AlgebraParams:
    kind: str
    values: tuple[Fraction, ...]

    def __str__(self) -> str:
        letter = "H" if self.kind == QUATERNION else "O"
        return f"{letter}({','.join(rational_to_str(v) for v in self.values)})"


@dataclass(frozen=True)
class AlgebraSpec:
    dim: int
    table: tuple[tuple[tuple[int | Fraction, ...], ...], ...]
    signature: tuple[int, ...] | None = None
    params: AlgebraParams | None = None
    label: str = ""
    # products[i][j] -> nonzero (k, c) pairs of e_i * e_j; derived, not compared
    _products: tuple = field(default=(), init=False, repr=False, compare=False)
    # the same pairs scaled to integers, with the common denominator
    _int_products: tuple = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        prods = tuple(
            tuple(
                tuple((k, c) for k, c in enumerate(self.table[i][j]) if c != 0)
                for j in range(self.dim)
            )
            for i in range(self.dim)
        )
        object.__setattr__(self, "_products", prods)
        den = lcm(*(Fraction(c).denominator for row in prods for cell in row for _, c in cell))
        scaled = tuple(tuple(tuple((k, int(c * den)) for k, c in cell) for cell in row) for row in prods)
        object.__setattr__(self, "_int_products", (scaled, den))
        if not self.label:
            object.__setattr__(self, "label", str(self.params) if self.params else f"custom(dim={self.dim})")

    def basis(self, i: int) -> AlgebraElement:
        coords = [0] * self.dim
        coords[i] = 1
        return AlgebraElement(self, tuple(coords))

    def one(self) -> AlgebraElement:
        return self.basis(0)

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, (0,) * self.dim)

    def element(self, coords: Iterable) -> AlgebraElement:
        return AlgebraElement(self, tuple(coords))

    def scalar(self, s) -> AlgebraElement:
        return AlgebraElement(self, (s,) + (0,) * (self.dim - 1))

    def norm_coefficients(self) -> tuple[Fraction, ...]:
        """Diagonal of the norm form, e.g. (1, a, b, ab) for H(a, b)."""
        if self.params is None:
            raise UnsupportedOperation(f"{self.label}: norm form needs a named construction")
        vals = self.params.values
        if self.params.kind == QUATERNION:
            a, b = vals
            return (Fraction(1), a, b, a * b)
        a, b, g = vals
        return (Fraction(1), a, b, a * b, g, a * g, b * g, a * b * g)

    def with_constant(self, i: int, j: int, k: int, value) -> AlgebraSpec:
        """Copy of this spec with one structure constant replaced."""
        cells = [[list(row) for row in plane] for plane in self.table]
        cells[i][j][k] = _canon(value)
        return AlgebraSpec(
            self.dim,
            _freeze(cells),
            self.signature,
            self.params,
            f"{self.label}[c{i}{j}{k}={rational_to_str(value)}]",
        )


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    spec: AlgebraSpec
    coords: tuple

    def __post_init__(self) -> None:
        if len(self.coords) != self.spec.dim:
            raise InputError(f"{self.spec.label} needs {self.spec.dim} coordinates, got {len(self.coords)}")

    def _check(self, other: AlgebraElement) -> None:
        if other.spec is not self.spec and other.spec != self.spec:
            raise InputError(f"elements of different algebras: {self.spec.label} vs {other.spec.label}")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        return AlgebraElement(self.spec, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        return AlgebraElement(self.spec, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.spec, tuple(-a for a in self.coords))

    def scale(self, s) -> AlgebraElement:
        return AlgebraElement(self.spec, tuple(s * a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return elem_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, AlgebraElement):
            return NotImplemented
        return self.scale(other)

    def __truediv__(self, s):
        return AlgebraElement(self.spec, tuple(a / s for a in self.coords))

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (other.spec is self.spec or other.spec == self.spec) and self.coords == other.coords

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_scalar(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def __str__(self) -> str:
        return format_coords(self.coords)

    def __repr__(self) -> str:
        return f"<{self.spec.label} {self}>"


def format_coords(coords: Sequence) -> str:
    return "(" + ", ".join(str(c) for c in coords) + ")"


def format_combo(coords: Sequence) -> str:
    """Render coordinates as a linear combination, e.g. ``-2e3``, ``1+e1``, ``0``."""
    parts: list[str] = []
    for k, c in enumerate(coords):
        if c == 0:
            continue
        c = _canon(c) if not hasattr(c, "to_pair") else c
        if k == 0:
            term = str(c)
        elif c == 1:
            term = f"e{k}"
        elif c == -1:
            term = f"-e{k}"
        elif isinstance(c, int):
            term = f"{c}e{k}"
        else:
            term = f"({c})e{k}"
        if parts and not term.startswith("-"):
            term = "+" + term
        parts.append(term)
    return "".join(parts) or "0"


def _over_common_denominator(coords: tuple) -> tuple[list[int], int] | None:
    if not all(type(c) in (int, Fraction) for c in coords):
        return None
    den = lcm(*(Fraction(c).denominator for c in coords))
    return [int(c * den) for c in coords], den


def _elem_mul_int(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement | None:
    # rational fast path: all arithmetic on integer numerators, one Fraction per coordinate
    xs, ys = _over_common_denominator(x.coords), _over_common_denominator(y.coords)
    if xs is None or ys is None:
        return None
    (xn, dx), (yn, dy) = xs, ys
    prods, dt = x.spec._int_products
    out = [0] * x.spec.dim
    ynz = [(j, v) for j, v in enumerate(yn) if v]
    for i, xi in enumerate(xn):
        if not xi:
            continue
        row = prods[i]
        for j, yj in ynz:
            w = xi * yj
            for k, c in row[j]:
                out[k] += w * c
    den = dx * dy * dt
    if den == 1:
        return AlgebraElement(x.spec, tuple(out))
    return AlgebraElement(x.spec, tuple(_canon(Fraction(v, den)) for v in out))


def elem_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._check(y)
    fast = _elem_mul_int(x, y)
    if fast is not None:
        return fast
    spec = x.spec
    out: list = [0] * spec.dim
    prods = spec._products
    ys = [(j, yj) for j, yj in enumerate(y.coords) if yj != 0]
    for i, xi in enumerate(x.coords):
        if xi == 0:
            continue
        row = prods[i]
        for j, yj in ys:
            w = xi * yj
            for k, c in row[j]:
                out[k] += w * c
    return AlgebraElement(spec, tuple(out))


def _freeze(cells) -> tuple:
    return tuple(tuple(tuple(_canon(c) for c in row) for row in plane) for plane in cells)


def _unit_violation(dim: int, cells) -> str | None:
    for j, k in product(range(dim), repeat=2):
        want = 1 if j == k else 0
        if cells[0][j][k] != want:
            return f"c[0][{j}][{k}] = {cells[0][j][k]}, expected {want} (e0 is not a left unit)"
        if cells[j][0][k] != want:
            return f"c[{j}][0][{k}] = {cells[j][0][k]}, expected {want} (e0 is not a right unit)"
    return None


def make_custom_algebra(
    dim: int,
    table,
    signature: Sequence[int] | None = None,
    params: AlgebraParams | None = None,
    label: str = "",
) -> AlgebraSpec:
    """Validate and wrap a structure-constant table.

    ``table`` is either nested ``[i][j][k]`` or flat in that order (length dim**3).
    """
    if not isinstance(dim, int) or dim < 1:
        raise InputError(f"dim must be a positive integer, got {dim!r}")
    flat = list(table)
    if len(flat) == dim and dim > 0 and isinstance(flat[0], (list, tuple)):
        cells = [[[as_fraction(c) for c in row] for row in plane] for plane in flat]
        if any(len(plane) != dim or any(len(row) != dim for row in plane) for plane in cells):
            raise InputError(f"table is not {dim}x{dim}x{dim}")
    else:
        if len(flat) != dim**3:
            raise InputError(f"flat table has {len(flat)} entries, expected {dim**3}")
        vals = [as_fraction(c) for c in flat]
        cells = [[vals[(i * dim + j) * dim:(i * dim + j + 1) * dim] for j in range(dim)] for i in range(dim)]
    bad = _unit_violation(dim, cells)
    if bad:
        raise InputError(f"not unital: {bad}")
    if signature is not None:
        signature = tuple(int(s) for s in signature)
        if len(signature) != dim or any(s not in (1, -1) for s in signature):
            raise InputError(f"signature must be {dim} entries of +1/-1, got {signature}")
        if signature[0] != 1:
            raise InputError("signature must fix the unit (+1 at index 0)")
    return AlgebraSpec(dim, _freeze(cells), signature, params, label)


# -- generalized quaternions ------------------------------------------------

# basis words over the generators i, j: 1, i, j, k = ij
_QUAT_WORDS = ("", "i", "j", "ij")


def _reduce_word(word: str, alpha: Fraction, beta: Fraction) -> tuple[Fraction, str]:
    """Normal form of a product of generators, using ji = -ij, ii = -alpha, jj = -beta."""
    coeff = Fraction(1)
    letters = list(word)
    changed = True
    while changed:
        changed = False
        for p in range(len(letters) - 1):
            pair = letters[p] + letters[p + 1]
            if pair == "ii":
                coeff *= -alpha
            elif pair == "jj":
                coeff *= -beta
            elif pair == "ji":
                coeff = -coeff
                letters[p], letters[p + 1] = "i", "j"
                changed = True
                break
            else:
                continue
            del letters[p:p + 2]
            changed = True
            break
    return coeff, "".join(letters)


def make_generalized_quaternion(alpha, beta) -> AlgebraSpec:
    """H(alpha, beta): i^2 = -alpha, j^2 = -beta, k = ij = -ji.

    The table is derived by rewriting products of generator words, then checked
    to be associative on every basis triple.
    """
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    cells = [[[Fraction(0)] * 4 for _ in range(4)] for _ in range(4)]
    for a, b in product(range(4), repeat=2):
        coeff, word = _reduce_word(_QUAT_WORDS[a] + _QUAT_WORDS[b], alpha, beta)
        cells[a][b][_QUAT_WORDS.index(word)] = coeff
    spec = make_custom_algebra(
        4, cells, (1, -1, -1, -1), AlgebraParams(QUATERNION, (alpha, beta))
    )
    bad = associativity_failures(spec)
    if bad:
        raise ConsistencyError(f"derived quaternion table is not associative at {bad[0]}")
    return spec


# -- generalized octonions --------------------------------------------------

# Row e_i, column e_j holds e_i * e_j. Letters a, b, g stand for alpha, beta, gamma.
_OCTONION_TABLE = (
    ("1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"),
    ("e1", "-a", "e3", "-a e2", "e5", "-a e4", "-e7", "a e6"),
    ("e2", "-e3", "-b", "b e1", "e6", "e7", "-b e4", "-b e5"),
    ("e3", "a e2", "-b e1", "-ab", "e7", "-a e6", "b e5", "-ab e4"),
    ("e4", "-e5", "-e6", "-e7", "-g", "g e1", "g e2", "g e3"),
    ("e5", "a e4", "-e7", "a e6", "-g e1", "-ag", "-g e3", "ag e2"),
    ("e6", "e7", "b e4", "-b e5", "-g e2", "g e3", "-bg", "-bg e1"),
    ("e7", "-a e6", "b e5", "ab e4", "-g e3", "-ag e2", "bg e1", "-abg"),
)

_CELL = re.compile(r"^(-?)\s*([abg]*)\s*(?:e([1-7]))?$")


def _octonion_cell(text: str, params: dict[str, Fraction]) -> tuple[int, Fraction]:
    if text == "1":
        return 0, Fraction(1)
    m = _CELL.match(text)
    if not m:
        raise ValueError(f"bad table cell {text!r}")
    sign, letters, idx = m.groups()
    coeff = Fraction(-1 if sign else 1)
    for ch in letters:
        coeff *= params[ch]
    return int(idx) if idx else 0, coeff


def make_generalized_octonion(alpha, beta, gamma) -> AlgebraSpec:
    alpha, beta, gamma = as_fraction(alpha), as_fraction(beta), as_fraction(gamma)
    params = {"a": alpha, "b": beta, "g": gamma}
    cells = [[[Fraction(0)] * 8 for _ in range(8)] for _ in range(8)]
    for i, row in enumerate(_OCTONION_TABLE):
        for j, text in enumerate(row):
            k, coeff = _octonion_cell(text, params)
            cells[i][j][k] = coeff
    return make_custom_algebra(
        8, cells, (1,) + (-1,) * 7, AlgebraParams(OCTONION, (alpha, beta, gamma))
    )


def named_algebra(text: str) -> AlgebraSpec:
    """Parse ``quaternion:a,b`` or ``octonion:a,b,c`` (exact fractions allowed)."""
    kind, sep, rest = text.partition(":")
    kind = kind.strip().lower()
    if not sep:
        raise InputError(f"expected kind:params, got {text!r}")
    try:
        vals = [parse_rational(v) for v in rest.split(",")]
    except InputError as exc:
        raise InputError(f"bad algebra parameters in {text!r}: {exc}") from None
    if kind in ("quaternion", "h") and len(vals) == 2:
        return make_generalized_quaternion(*vals)
    if kind in ("octonion", "o") and len(vals) == 3:
        return make_generalized_octonion(*vals)
    raise InputError(f"unknown algebra {text!r}; use quaternion:a,b or octonion:a,b,c")


def scalar_algebra() -> AlgebraSpec:
    return make_custom_algebra(1, [[[1]]], (1,), label="R")


# -- random tables ----------------------------------------------------------

def random_algebra(rng: random.Random, dim: int, lo: int = -3, hi: int = 3, label: str = "") -> AlgebraSpec:
    """Integer structure constants uniform in [lo, hi], unit row/column forced."""
    cells = [[[rng.randint(lo, hi) for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]
    for j, k in product(range(dim), repeat=2):
        cells[0][j][k] = cells[j][0][k] = 1 if j == k else 0
    return make_custom_algebra(dim, cells, label=label or f"random(dim={dim})")


def random_algebras(count: int, seed: int, dims: Sequence[int] = tuple(range(1, 9))) -> list[AlgebraSpec]:
    """``count`` reproducible random algebras cycling through ``dims``."""
    rng = random.Random(seed)
    out = []
    for n in range(count):
        dim = dims[n % len(dims)]
        out.append(random_algebra(rng, dim, label=f"random(seed={seed},#{n},dim={dim})"))
    return out


# -- structure checks -------------------------------------------------------

def associativity_failures(spec: AlgebraSpec) -> list[tuple[int, int, int]]:
    bad = []
    for a, b, c in product(range(spec.dim), repeat=3):
        ea, eb, ec = spec.basis(a), spec.basis(b), spec.basis(c)
        if (ea * eb) * ec != ea * (eb * ec):
            bad.append((a, b, c))
    return bad


def conjugate(x: AlgebraElement) -> AlgebraElement:
    sig = x.spec.signature
    if sig is None:
        raise UnsupportedOperation(f"{x.spec.label} has no conjugation signature")
    return AlgebraElement(x.spec, tuple(s * c for s, c in zip(sig, x.coords)))


def trace_norm(x: AlgebraElement) -> tuple:
    """(t(x), n(x)), checked against x + conj(x) and x * conj(x).

    Named algebras use the closed forms t = 2 x_0 and n = sum d_k x_k^2. Custom
    algebras with a signature fall back to the products, which must be scalar.
    """
    xbar = conjugate(x)
    t_elem = x + xbar
    n_elem = x * xbar
    if x.spec.params is None:
        if not (t_elem.is_scalar() and n_elem.is_scalar()):
            raise UnsupportedOperation(f"{x.spec.label}: x + conj(x) or x * conj(x) is not scalar")
        return t_elem.coords[0], n_elem.coords[0]
    t = 2 * x.coords[0]
    n = sum(d * c * c for d, c in zip(x.spec.norm_coefficients(), x.coords))
    if t_elem != x.spec.scalar(t) or n_elem != x.spec.scalar(n):
        raise ConsistencyError(f"{x.spec.label}: closed-form trace/norm disagree with products for {x}")
    return t, n


def quadratic_identity_check(x: AlgebraElement) -> tuple[bool, AlgebraElement]:
    """Residual of x^2 - t(x) x + n(x); zero for every element of a named algebra."""
    t, n = trace_norm(x)
    residual = x * x - x.scale(t) + x.spec.scalar(n)
    return residual.is_zero(), residual


DIVISION = "division"
SPLIT = "split"


def classify_division(spec: AlgebraSpec) -> str:
    """Over the reals: division iff every parameter is positive."""
    if spec.params is None:
        raise UnsupportedOperation(f"{spec.label}: only named quaternion/octonion algebras are classified")
    return DIVISION if all(v > 0 for v in spec.params.values) else SPLIT


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


@dataclass(frozen=True)
class IsotropicWitness:
    """A nonzero real vector with zero norm.

    The vector's k-th coordinate is ``sqrt(squared[k])``; ``element`` is set when
    every coordinate happens to be rational.
    """

    squared: tuple[Fraction, ...]
    element: AlgebraElement | None

    def norm_value(self, spec: AlgebraSpec) -> Fraction:
        return sum(d * s for d, s in zip(spec.norm_coefficients(), self.squared))


def isotropic_witness(spec: AlgebraSpec) -> IsotropicWitness | None:
    """Witness for a split algebra, None for a division algebra."""
    if classify_division(spec) == DIVISION:
        return None
    coeffs = spec.norm_coefficients()
    k = next(i for i, d in enumerate(coeffs) if d < 0)
    squared = [Fraction(0)] * spec.dim
    squared[0] = -coeffs[k]
    squared[k] = Fraction(1)
    root = _rational_sqrt(-coeffs[k])
    elem = None
    if root is not None:
        coords = [0] * spec.dim
        coords[0], coords[k] = root, 1
        elem = spec.element(coords)
    w = IsotropicWitness(tuple(squared), elem)
    if w.norm_value(spec) != 0 or (elem is not None and not (elem * conjugate(elem)).is_zero()):
        raise ConsistencyError(f"{spec.label}: isotropic witness does not vanish")
    return w


# -- text import/export -----------------------------------------------------

def spec_to_dict(spec: AlgebraSpec) -> dict[str, Any]:
    flat = [rational_to_str(c) for plane in spec.table for row in plane for c in row]
    params = None
    if spec.params is not None:
        params = {"kind": spec.params.kind, "values": [rational_to_str(v) for v in spec.params.values]}
    return {
        "dim": spec.dim,
        "table": flat,
        "signature": list(spec.signature) if spec.signature else None,
        "params": params,
        "label": spec.label,
    }


def spec_from_dict(doc: dict[str, Any]) -> AlgebraSpec:
    try:
        dim = doc["dim"]
        table = doc["table"]
    except (KeyError, TypeError):
        raise InputError("algebra document needs 'dim' and 'table'") from None
    params = None
    if doc.get("params"):
        p = doc["params"]
        kind = p.get("kind")
        values = tuple(parse_rational(v) for v in p.get("values", ()))
        if (kind, len(values)) not in ((QUATERNION, 2), (OCTONION, 3)) or dim != (4 if kind == QUATERNION else 8):
            raise InputError(f"params {p!r} do not describe a {dim}-dimensional named algebra")
        params = AlgebraParams(kind, values)
    return make_custom_algebra(dim, table, doc.get("signature"), params, doc.get("label", ""))


def dumps_spec(spec: AlgebraSpec) -> str:
    return json.dumps(spec_to_dict(spec), indent=2) + "\n"


def loads_spec(text: str) -> AlgebraSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"algebra file is not valid JSON: {exc}") from None
    return spec_from_dict(doc)
