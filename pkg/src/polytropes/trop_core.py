"""Min-plus semiring scalars and matrices.

Scalars are exact :class:`fractions.Fraction` values or the singleton ``INF``.
Tropical addition is ``min`` and tropical multiplication is ``+``; ``INF`` is
neutral for the former and absorbing for the latter.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatch, InfiniteEntry, NegativeCycle, SizeLimitExceeded

TDET_LIMIT = 10


@total_ordering
class _Infinity:
    """The tropical zero. Compares greater than every rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("tropical-infinity")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("INF - INF is undefined")
        return self

    def __rsub__(self, other):
        raise ArithmeticError("cannot subtract INF from a finite value")

    def __neg__(self):
        raise ArithmeticError("INF has no negation in the min-plus semiring")

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

Scalar = Union[Fraction, _Infinity]


def scalar(x) -> Scalar:
    """Coerce ``x`` (int, Fraction, str, INF, float('inf')) to a tropical scalar."""
    if x is INF:
        return INF
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if x == float("inf"):
            return INF
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if s.lower() in ("inf", "+inf", "infinity"):
            return INF
        return Fraction(s)
    raise TypeError(f"cannot interpret {x!r} as a tropical scalar")


def is_finite(x: Scalar) -> bool:
    return x is not INF


def tadd(a: Scalar, b: Scalar) -> Scalar:
    """Tropical sum, ``min(a, b)``."""
    return b if a is INF or (b is not INF and b < a) else a


def tmul(a: Scalar, b: Scalar) -> Scalar:
    """Tropical product, ``a + b`` with INF absorbing."""
    if a is INF or b is INF:
        return INF
    return a + b


@dataclass(frozen=True)
class TropicalMatrix:
    """Dense row-major matrix over the min-plus semiring."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(scalar(x) for x in row) for row in self.entries)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise DimensionMismatch("rows of unequal length")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "TropicalMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "TropicalMatrix":
        return cls(tuple(zip(*cols)))

    @classmethod
    def identity(cls, n: int) -> "TropicalMatrix":
        return cls(tuple(tuple(Fraction(0) if i == j else INF for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list:
        return [self.col(j) for j in range(self.cols)]

    def tolist(self) -> list:
        return [list(r) for r in self.entries]

    def __matmul__(self, other: "TropicalMatrix") -> "TropicalMatrix":
        return mat_trop_mul(self, other)

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in r) for r in self.entries)


def mat_trop_mul(a: TropicalMatrix, b: TropicalMatrix) -> TropicalMatrix:
    """Min-plus matrix product."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    out = []
    for i in range(a.rows):
        row = []
        for k in range(b.cols):
            acc = INF
            for j in range(a.cols):
                acc = tadd(acc, tmul(a[i, j], b[j, k]))
            row.append(acc)
        out.append(row)
    return TropicalMatrix.from_rows(out)


def mat_trop_add(a: TropicalMatrix, b: TropicalMatrix) -> TropicalMatrix:
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot add {a.shape} and {b.shape}")
    return TropicalMatrix.from_rows(
        [tadd(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a.entries, b.entries)
    )


def _require_square(a: TropicalMatrix, what: str):
    if not a.is_square:
        raise DimensionMismatch(f"{what} needs a square matrix, got {a.shape}")


def kleene_star(a: TropicalMatrix) -> TropicalMatrix:
    """Closure ``I + A + A^2 + ... + A^(n-1)`` computed by Floyd-Warshall.

    Raises NegativeCycle if the closure would have a negative diagonal entry.
    """
    _require_square(a, "kleene_star")
    n = a.rows
    m = [list(r) for r in a.entries]
    for i in range(n):
        m[i][i] = tadd(m[i][i], Fraction(0))
    for k in range(n):
        mk = m[k]
        for i in range(n):
            mik = m[i][k]
            if mik is INF:
                continue
            mi = m[i]
            for j in range(n):
                if mk[j] is INF:
                    continue
                s = mik + mk[j]
                if mi[j] is INF or s < mi[j]:
                    mi[j] = s
    for i in range(n):
        if m[i][i] < 0:
            raise NegativeCycle(f"closure has negative diagonal entry at index {i + 1}")
    return TropicalMatrix.from_rows(m)


def kleene_star_violations(a: TropicalMatrix) -> list:
    """Human-readable reasons why ``a`` is not a Kleene star (empty if it is)."""
    if not a.is_square:
        return [f"matrix is {a.rows}x{a.cols}, not square"]
    n = a.rows
    problems = []
    for i in range(n):
        for j in range(n):
            if a[i, j] is INF:
                problems.append(f"entry ({i + 1},{j + 1}) is infinite")
    if problems:
        return problems
    for i in range(n):
        if a[i, i] != 0:
            problems.append(f"diagonal entry ({i + 1},{i + 1}) = {a[i, i]} is not 0")
    for i, k, j in itertools.product(range(n), repeat=3):
        if a[i, k] + a[k, j] < a[i, j]:
            problems.append(
                f"triangle ({i + 1},{k + 1},{j + 1}): "
                f"{a[i, k]} + {a[k, j]} < {a[i, j]}"
            )
    return problems


def is_kleene_star(a: TropicalMatrix) -> bool:
    """Zero diagonal and ``a[i,k] + a[k,j] >= a[i,j]`` for every triple."""
    return not kleene_star_violations(a)


def tdet_min(a: TropicalMatrix, limit: int = TDET_LIMIT) -> Scalar:
    """Tropical determinant: min over permutations of the diagonal sum.

    This is the optimal value of the assignment problem on ``a``; brute force
    is used since the matrices here are at most a handful of rows.
    """
    _require_square(a, "tdet_min")
    n = a.rows
    if n > limit:
        raise SizeLimitExceeded(f"tdet_min enumerates permutations only up to n={limit}, got {n}")
    if n == 0:
        return Fraction(0)
    # scale to a common denominator so the permutation loop runs on ints
    den = math.lcm(*(x.denominator for r in a.entries for x in r if x is not INF))
    rows = [[None if x is INF else x.numerator * (den // x.denominator) for x in r] for r in a.entries]
    best = None
    for perm in itertools.permutations(range(n)):
        total = 0
        for i, j in enumerate(perm):
            x = rows[i][j]
            if x is None:
                break
            total += x
        else:
            if best is None or total < best:
                best = total
    return INF if best is None else Fraction(best, den)


def canonical_projection(v: TropicalMatrix) -> TropicalMatrix:
    """Subtract each column's last entry from that column so the last row is 0."""
    _require_square(v, "canonical_projection")
    last = v.row(v.rows - 1)
    if any(x is INF for x in last):
        raise InfiniteEntry("last row must be finite for the canonical projection")
    cols = [[x - last[j] for x in col] for j, col in enumerate(v.columns())]
    return TropicalMatrix.from_columns(cols)


def translate_to_zero_last_row(a: TropicalMatrix) -> TropicalMatrix:
    """Replace ``a_ij`` by ``a_ij + a_ni - a_nj`` (n the last index).

    For a Kleene star this translates the polytrope so that every coordinate
    has minimum 0; the result is again a Kleene star, now with zero last row.
    """
    _require_square(a, "translate_to_zero_last_row")
    last = a.row(a.rows - 1)
    if any(x is INF for x in last):
        raise InfiniteEntry("last row must be finite to translate")
    return TropicalMatrix.from_rows(
        [x + last[i] - last[j] for j, x in enumerate(r)] for i, r in enumerate(a.entries)
    )


@dataclass(frozen=True, eq=False)
class HomogeneousPoint:
    """A point of tropical projective space, i.e. a vector modulo ``+ c * (1,...,1)``."""

    coords: tuple

    def __post_init__(self):
        coords = tuple(scalar(x) for x in self.coords)
        if not coords or all(x is INF for x in coords):
            raise ValueError("a homogeneous point needs at least one finite coordinate")
        object.__setattr__(self, "coords", coords)

    def __len__(self):
        return len(self.coords)

    def normalized(self) -> tuple:
        """Representative whose last finite coordinate is 0."""
        ref = next(x for x in reversed(self.coords) if x is not INF)
        return tuple(x if x is INF else x - ref for x in self.coords)

    def __eq__(self, other):
        if not isinstance(other, HomogeneousPoint):
            return NotImplemented
        if len(self) != len(other):
            return False
        if any((x is INF) != (y is INF) for x, y in zip(self.coords, other.coords)):
            return False
        return self.normalized() == other.normalized()

    def __hash__(self):
        return hash(self.normalized())

    def project(self) -> tuple:
        """Affine chart obtained by subtracting the last coordinate and dropping it."""
        last = self.coords[-1]
        if last is INF or any(x is INF for x in self.coords):
            raise InfiniteEntry("projection to R^d needs finite coordinates")
        return tuple(x - last for x in self.coords[:-1])
