"""Pseudovertex enumeration via the tropical Cramer rule.

Each weakly increasing multi-index I of length d over the d+1 tropical
vertices picks rows v_{i_1}, ..., v_{i_d}. The negated Cramer vector of that
d x (d+1) matrix, projected to R^d, is an ordinary vertex of the polytrope.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .exact_num import det_exact, columns_to_matrix
from .polytrope import Polytrope, facets, contains
from .trop_core import HomogeneousPoint, TropicalMatrix, tdet_min


def multi_indices(d: int) -> list:
    """All weakly increasing 1-based tuples of length d over 1..d+1, lexicographic."""
    if d < 1:
        raise ValueError("dimension must be at least 1")
    out = list(itertools.combinations_with_replacement(range(1, d + 2), d))
    assert len(out) == comb(2 * d, d)
    return out


def tropical_cramer(rows) -> HomogeneousPoint:
    """Cramer vector (min convention) of a d x (d+1) matrix.

    Coordinate k is the tropical determinant of the matrix with column k
    removed.
    """
    if not isinstance(rows, TropicalMatrix):
        rows = TropicalMatrix.from_rows(rows)
    if rows.cols != rows.rows + 1:
        raise ValueError(f"tropical_cramer needs a d x (d+1) matrix, got {rows.shape}")
    keep = range(rows.cols)
    coords = []
    for k in keep:
        sub = TropicalMatrix.from_rows([r[:k] + r[k + 1 :] for r in rows.entries])
        coords.append(tdet_min(sub))
    return HomogeneousPoint(tuple(coords))


def cramer_point(p: Polytrope, index) -> tuple:
    """Pseudovertex in R^d generated by a 1-based multi-index."""
    cols = p.star.columns()
    c = tropical_cramer([cols[i - 1] for i in index])
    neg = HomogeneousPoint(tuple(-x for x in c.coords))
    return neg.project()


@dataclass(frozen=True)
class Pseudovertex:
    point: tuple
    generators: tuple
    tight: tuple

    @property
    def dim(self) -> int:
        return len(self.point)


def active_facets(p: Polytrope, v) -> list:
    """Facet pairs (i, j) tight at ``v``, in hrep order."""
    y = tuple(v) + (0,)
    return [h.pair for h in _facets_cached(p) if y[h.i - 1] - y[h.j - 1] == h.bound]


@lru_cache(maxsize=512)
def _facets_cached(p: Polytrope) -> tuple:
    return tuple(facets(p))


@lru_cache(maxsize=512)
def _cramer_points_cached(p: Polytrope) -> tuple:
    return tuple((idx, cramer_point(p, idx)) for idx in multi_indices(p.dim))


def _cramer_points(p: Polytrope) -> list:
    return list(_cramer_points_cached(p))


def enumerate_pseudovertices(p: Polytrope) -> list:
    """Distinct pseudovertices in order of first generating multi-index."""
    merged = {}
    for idx, pt in _cramer_points(p):
        merged.setdefault(pt, []).append(idx)
    out = []
    for pt, gens in merged.items():
        if not contains(p, pt):
            raise AssertionError(f"Cramer point {pt} from {gens[0]} lies outside the polytrope")
        out.append(Pseudovertex(pt, tuple(gens), tuple(active_facets(p, pt))))
    return out


def is_maximal(p: Polytrope) -> bool:
    """All C(2d, d) Cramer points are pairwise distinct."""
    pts = [pt for _, pt in _cramer_points(p)]
    return len(set(pts)) == len(pts)


def normals_of(p: Polytrope, pairs) -> list:
    lookup = {h.pair: h.normal for h in p.hrep}
    return [lookup[pr] for pr in pairs]


def is_simple_vertex(p: Polytrope, pv: Pseudovertex) -> bool:
    if len(pv.tight) != p.dim:
        return False
    normals = normals_of(p, pv.tight)
    return det_exact(columns_to_matrix(normals)) != 0


def is_simple(p: Polytrope, vertices=None) -> bool:
    """Every pseudovertex lies on exactly d facets with independent normals."""
    if vertices is None:
        vertices = enumerate_pseudovertices(p)
    return all(is_simple_vertex(p, v) for v in vertices)
