"""Volume checks that do not go through Cramer's rule or the vertex formula.

``exact_volume_low_dim`` finds vertices by intersecting every d-subset of the
half-space hyperplanes, then applies the shoelace formula (d = 2) or sums a
fan of tetrahedra over the facets (d = 3), all in exact arithmetic.
``monte_carlo_volume`` samples the bounding box on a 2^-32 grid so that
membership is an exact integer comparison.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from typing import Optional

import numpy as np

from .errors import UnsupportedDimension
from .polytrope import Polytrope, contains, is_degenerate
from .trop_core import TropicalMatrix
from .volume import Objective, compute_volume, powers_base

log = logging.getLogger(__name__)

GRID_BITS = 32
CHUNK = 100_000


def _inverse(a: list) -> Optional[list]:
    """Gauss-Jordan inverse over the rationals; None if singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == r)) for i in range(n)] for r, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


@lru_cache(maxsize=None)
def _vertex_systems(dim: int) -> tuple:
    """For each nonsingular d-subset of hrep rows: (row indices, adjugate, det).

    The adjugate is ``det * inverse`` and therefore integral.
    """
    normals = [h.normal for h in Polytrope(TropicalMatrix.from_rows([[0] * (dim + 1)] * (dim + 1))).hrep]
    out = []
    for combo in itertools.combinations(range(len(normals)), dim):
        a = [normals[k] for k in combo]
        inv = _inverse(a)
        if inv is None:
            continue
        det = _leibniz_det(a)
        adj = tuple(tuple(int(x * det) for x in row) for row in inv)
        out.append((combo, adj, det))
    return tuple(out)


def _leibniz_det(a) -> int:
    # Leibniz expansion; kept separate from the Bareiss routine used by the volume path
    det = Fraction(0)
    n = len(a)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for x in range(n) for y in range(x + 1, n) if perm[x] > perm[y])
        term = Fraction((-1) ** inversions)
        for r, c in enumerate(perm):
            term *= a[r][c]
        det += term
    return int(det)


def hrep_vertices(p: Polytrope) -> list:
    """Vertices of ``p`` by brute-force H-to-V conversion, sorted.

    Works on integers: bounds are scaled by their common denominator and each
    candidate is kept as (integer numerators, positive scale) until accepted.
    """
    den = math.lcm(*(h.bound.denominator for h in p.hrep))
    bints = [int(h.bound * den) for h in p.hrep]
    pairs = [(h.i - 1, h.j - 1) for h in p.hrep]
    d = p.dim
    found = set()
    for combo, adj, det in _vertex_systems(d):
        b = [bints[k] for k in combo]
        sgn = 1 if det > 0 else -1
        xs = [sgn * sum(r * y for r, y in zip(row, b)) for row in adj] + [0]
        scale = abs(det)
        if all(xs[i] - xs[j] <= bb * scale for (i, j), bb in zip(pairs, bints)):
            found.add(tuple(Fraction(x, scale * den) for x in xs[:d]))
    return sorted(found)


def _centroid(pts) -> tuple:
    n = len(pts)
    return tuple(sum(c) / n for c in zip(*pts))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _angular_order(coords2d: list) -> list:
    """Indices of 2d vectors sorted counter-clockwise starting from angle 0."""

    def half(v):
        x, y = v
        return 0 if y > 0 or (y == 0 and x > 0) else 1

    def cmp(i, j):
        u, v = coords2d[i], coords2d[j]
        hu, hv = half(u), half(v)
        if hu != hv:
            return hu - hv
        cr = u[0] * v[1] - u[1] * v[0]
        return -1 if cr > 0 else (1 if cr < 0 else 0)

    return sorted(range(len(coords2d)), key=cmp_to_key(cmp))


def order_polygon_2d(pts: list) -> list:
    c = _centroid(pts)
    rel = [_sub(q, c) for q in pts]
    return [pts[i] for i in _angular_order(rel)]


def shoelace(poly: list) -> Fraction:
    n = len(poly)
    s = sum(poly[k][0] * poly[(k + 1) % n][1] - poly[(k + 1) % n][0] * poly[k][1] for k in range(n))
    return abs(Fraction(s)) / 2


def _order_in_plane(pts: list, normal: tuple) -> list:
    c = _centroid(pts)
    rel = [_sub(q, c) for q in pts]
    r = next(v for v in rel if any(v))
    w = _cross(normal, r)
    return [pts[i] for i in _angular_order([(_dot(v, r), _dot(v, w)) for v in rel])]


def _det3(a, b, c) -> Fraction:
    return _dot(a, _cross(b, c))


def exact_volume_low_dim(p: Polytrope) -> Fraction:
    d = p.dim
    if d not in (2, 3):
        raise UnsupportedDimension(f"exact oracle supports d = 2 or 3, got {d}")
    if is_degenerate(p):
        return Fraction(0)
    verts = hrep_vertices(p)
    if d == 2:
        return shoelace(order_polygon_2d(verts))
    g = _centroid(verts)
    total = Fraction(0)
    for h in p.hrep:
        face = [v for v in verts if _dot(h.normal, v) == h.bound]
        if len(face) < 3:
            continue
        ring = _order_in_plane(face, h.normal)
        a0 = _sub(ring[0], g)
        for k in range(1, len(ring) - 1):
            total += abs(_det3(a0, _sub(ring[k], g), _sub(ring[k + 1], g)))
    return total / 6


@dataclass
class McEstimate:
    estimate: Fraction
    stderr: float
    samples: int
    hits: int
    seed: int
    box: list

    @property
    def box_volume(self) -> Fraction:
        return math.prod((hi - lo for lo, hi in self.box), start=Fraction(1))

    def agrees_with(self, value, k: float = 3.0) -> bool:
        return abs(float(self.estimate) - float(value)) <= k * self.stderr


def bounding_box(p: Polytrope) -> list:
    """Per-axis [lo, hi] from the constraints (d+1, i) and (i, d+1)."""
    n = p.dim + 1
    return [(-p.b(n, i), p.b(i, n)) for i in range(1, n)]


def monte_carlo_volume(p: Polytrope, samples: int = 100_000, seed: int = 0) -> McEstimate:
    """Hit-or-miss estimate over the bounding box, deterministic in (p, samples, seed)."""
    box = bounding_box(p)
    if is_degenerate(p):
        return McEstimate(Fraction(0), 0.0, samples, 0, seed, box)
    scale = 1 << GRID_BITS
    lo = np.array([math.ceil(a * scale) for a, _ in box], dtype=np.int64)
    hi = np.array([math.floor(b * scale) for _, b in box], dtype=np.int64)
    cons = [(h.i - 1, h.j - 1, math.floor(h.bound * scale)) for h in p.hrep]
    if max(abs(c[2]) for c in cons) >= 1 << 61:
        raise ValueError("bounds too large for the 2^-32 sampling grid")
    d = p.dim
    rng = np.random.default_rng(seed)
    hits = 0
    remaining = samples
    while remaining:
        m = min(CHUNK, remaining)
        u = rng.integers(lo, hi, size=(m, d), endpoint=True)
        u = np.hstack([u, np.zeros((m, 1), dtype=np.int64)])
        ok = np.ones(m, dtype=bool)
        for i, j, bnd in cons:
            ok &= (u[:, i] - u[:, j]) <= bnd
        hits += int(ok.sum())
        remaining -= m
    vol = math.prod((b - a for a, b in box), start=Fraction(1))
    frac = Fraction(hits, samples)
    est = frac * vol
    stderr = float(vol) * math.sqrt(float(frac) * (1 - float(frac)) / samples)
    return McEstimate(est, stderr, samples, hits, seed, box)


@dataclass
class CrossCheckReport:
    dim: int
    default_total: Fraction
    alt_total: Fraction
    default_objective: tuple
    alt_objective: tuple
    exact_total: Optional[Fraction] = None
    mc: Optional[McEstimate] = None
    checks: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)


def cross_check(p: Polytrope, samples: int = 200_000, seed: int = 0) -> CrossCheckReport:
    """Compare the vertex-formula volume against independent routes.

    A Monte Carlo disagreement is recorded as a warning rather than a failed
    check, since it is a statistical statement.
    """
    default = compute_volume(p)
    alt_obj = Objective.powers(p.dim, powers_base(p))
    alt = compute_volume(p, objective=alt_obj) if not is_degenerate(p) else default
    rep = CrossCheckReport(
        p.dim,
        default.total,
        alt.total,
        default.objective.c if default.objective else (),
        alt_obj.c,
    )
    rep.checks.append(
        ("objective invariance", default.total == alt.total, f"{default.total} vs {alt.total}")
    )
    if p.dim in (2, 3):
        rep.exact_total = exact_volume_low_dim(p)
        rep.checks.append(
            ("exact oracle", rep.exact_total == default.total, f"{rep.exact_total} vs {default.total}")
        )
    else:
        rep.mc = monte_carlo_volume(p, samples, seed)
        if not rep.mc.agrees_with(default.total):
            msg = (
                f"Monte Carlo estimate {float(rep.mc.estimate):.6g} +- {rep.mc.stderr:.3g} "
                f"is more than 3 stderr from {default.total}"
            )
            log.warning(msg)
            rep.warnings.append(msg)
    return rep
