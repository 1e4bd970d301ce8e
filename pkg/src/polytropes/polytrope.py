"""Polytropes given by their Kleene star matrix.

A polytrope in R^d is stored as a (d+1)x(d+1) Kleene star whose last row is
zero. Its columns, with the last coordinate dropped, are the d+1 tropical
vertices. Indices in :class:`HalfSpace` are 1-based to match the usual
``b_ij`` notation; everything else is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import InvalidPolytrope
from .trop_core import (
    HomogeneousPoint,
    TropicalMatrix,
    canonical_projection,
    kleene_star,
    kleene_star_violations,
    translate_to_zero_last_row,
)


@dataclass(frozen=True)
class HalfSpace:
    """The constraint ``x_i - x_j <= bound`` with ``x_{d+1} = 0``."""

    i: int
    j: int
    bound: Fraction
    dim: int

    @property
    def normal(self) -> tuple:
        """Projected normal ``e_i - e_j`` with the last coordinate dropped."""
        v = [0] * (self.dim + 1)
        v[self.i - 1] += 1
        v[self.j - 1] -= 1
        return tuple(v[: self.dim])

    @property
    def pair(self) -> tuple:
        return (self.i, self.j)

    def slack(self, x: Sequence[Fraction]) -> Fraction:
        """``bound - <normal, x>``; nonnegative iff ``x`` satisfies the constraint."""
        return self.bound - sum(a * b for a, b in zip(self.normal, x))


def hrep_pairs(dim: int) -> list:
    """Ordered (i, j) pairs of the half-space system.

    Grouped by j; within a group, i runs over 1..d with the slot j taken
    by d+1. This is the order in which the normals appear in the worked
    tables, so tight sets listed in this order reproduce their gammas.
    """
    n = dim + 1
    pairs = []
    for j in range(1, n + 1):
        for slot in range(1, n):
            i = n if slot == j else slot
            pairs.append((i, j))
    return pairs


@dataclass(frozen=True)
class Polytrope:
    """Validated Kleene star with zero last row plus its half-space system."""

    star: TropicalMatrix
    hrep: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        star = self.star
        if not isinstance(star, TropicalMatrix):
            star = TropicalMatrix.from_rows(star)
            object.__setattr__(self, "star", star)
        if star.rows < 2:
            raise InvalidPolytrope("a polytrope needs at least a 2x2 star (dimension >= 1)")
        problems = kleene_star_violations(star)
        if problems:
            raise InvalidPolytrope("not a Kleene star: " + "; ".join(problems[:5]))
        if any(x != 0 for x in star.row(star.rows - 1)):
            raise InvalidPolytrope("last row of the star must be zero")
        object.__setattr__(self, "hrep", tuple(_build_hrep(star)))

    @property
    def dim(self) -> int:
        return self.star.rows - 1

    def tropical_vertices(self) -> list:
        """The d+1 tropical vertices as points of R^d."""
        return [tuple(col[:-1]) for col in self.star.columns()]

    def b(self, i: int, j: int) -> Fraction:
        """Star entry with 1-based indices."""
        return self.star[i - 1, j - 1]

    @classmethod
    def from_points(cls, v: TropicalMatrix) -> "Polytrope":
        """Maximal cell of the tropical convex hull of the columns of ``v``.

        If some coordinate of the hull dips below 0 (possible only when the
        projected points have negative entries), the star is translated so
        that each coordinate has minimum 0. Shape and volume are unchanged.
        """
        if not isinstance(v, TropicalMatrix):
            v = TropicalMatrix.from_rows(v)
        star = kleene_star(canonical_projection(v))
        if any(x != 0 for x in star.row(star.rows - 1)):
            star = translate_to_zero_last_row(star)
        return cls(star)


def _build_hrep(star: TropicalMatrix) -> list:
    n = star.rows
    dim = n - 1
    cols = star.columns()
    out = []
    for i, j in hrep_pairs(dim):
        bound = max(c[i - 1] - c[j - 1] for c in cols)
        if bound != star[i - 1, j - 1]:
            raise InvalidPolytrope(f"vertex maximum {bound} differs from star entry for ({i},{j})")
        out.append(HalfSpace(i, j, bound, dim))
    return out


def hrep(p: Polytrope) -> list:
    return list(p.hrep)


def lift(x: Sequence) -> tuple:
    return tuple(Fraction(c) for c in x) + (Fraction(0),)


def contains(p: Polytrope, x: Sequence) -> bool:
    """Exact membership test against every half-space."""
    if len(x) != p.dim:
        raise ValueError(f"point has {len(x)} coordinates, polytrope lives in R^{p.dim}")
    y = lift(x)
    return all(y[h.i - 1] - y[h.j - 1] <= h.bound for h in p.hrep)


def tight_pairs(p: Polytrope, x: Sequence) -> list:
    """All (i, j) whose half-space is tight at ``x``, in hrep order."""
    y = lift(x)
    return [h.pair for h in p.hrep if y[h.i - 1] - y[h.j - 1] == h.bound]


def is_degenerate(p: Polytrope) -> bool:
    """True iff the polytrope has zero width along some ``e_i - e_j``."""
    n = p.star.rows
    return any(p.star[i, j] + p.star[j, i] == 0 for i in range(n) for j in range(i + 1, n))


def is_facet(p: Polytrope, i: int, j: int) -> bool:
    """Whether constraint (i, j) defines a facet of a full-dimensional polytrope.

    Because the star is closed under shortest paths, (i, j) is implied by
    the others exactly when ``b_ij = b_ik + b_kj`` for some third index k.
    """
    n = p.star.rows
    b = p.star
    return all(b[i - 1, j - 1] < b[i - 1, k] + b[k, j - 1] for k in range(n) if k not in (i - 1, j - 1))


def facets(p: Polytrope) -> list:
    """Half-spaces that define facets (hrep order). Empty for degenerate input."""
    if is_degenerate(p):
        return []
    return [h for h in p.hrep if is_facet(p, h.i, h.j)]


def tropical_segment(x, y) -> list:
    """Breakpoints in R^d of the tropical segment from ``x`` to ``y``.

    ``x`` and ``y`` are homogeneous points (d+1 finite coordinates). The
    segment is traced by ``min(lam + x, y)`` as ``lam`` sweeps the sorted
    coordinate differences ``y_k - x_k``.
    """
    if not isinstance(x, HomogeneousPoint):
        x = HomogeneousPoint(tuple(x))
    if not isinstance(y, HomogeneousPoint):
        y = HomogeneousPoint(tuple(y))
    xs, ys = x.coords, y.coords
    if len(xs) != len(ys):
        raise ValueError("points must have the same length")
    lams = sorted(set(b - a for a, b in zip(xs, ys)))
    out = []
    for lam in lams:
        pt = HomogeneousPoint(tuple(min(lam + a, b) for a, b in zip(xs, ys))).project()
        if not out or out[-1] != pt:
            out.append(pt)
    return out
