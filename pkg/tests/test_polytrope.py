from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import SQUARE, fractions, polytropes
from polytropes.errors import InvalidPolytrope, NegativeCycle
from polytropes.oracle import hrep_vertices
from polytropes.polytrope import (
    Polytrope,
    contains,
    facets,
    hrep,
    is_degenerate,
    is_facet,
    tight_pairs,
    tropical_segment,
)
from polytropes.trop_core import TropicalMatrix, canonical_projection, kleene_star

M = TropicalMatrix.from_rows
EX2D = [[0, 1, 2], [1, 0, 2], [0, 0, 0]]


def test_hrep_bounds_2d(golden):
    assert [h.bound for h in hrep(golden["ex2d"])] == [0, 1, 1, 0, 2, 2]


def test_hrep_bounds_3d(golden):
    assert [h.bound for h in hrep(golden["ex3d"])] == [0, 2, 2, 2, 0, 3, 4, 4, 0, 8, 7, 8]


def test_hrep_of_point():
    p = Polytrope(M([[0] * 3] * 3))
    assert all(h.bound == 0 for h in p.hrep)
    assert is_degenerate(p)


def test_contains(golden):
    p = golden["ex2d"]
    assert contains(p, (0, 0))
    assert not contains(p, (3, 3))
    assert all(contains(p, v) for v in p.tropical_vertices())


def test_segment():
    assert tropical_segment((0, 1, 0), (2, 2, 0)) == [(0, 1), (1, 2), (2, 2)]
    assert tropical_segment((1, 1, 0), (2, 2, 1)) == [(1, 1)]


def test_degenerate_examples(golden):
    assert is_degenerate(Polytrope(M([[0, 0, 1], [0, 0, 1], [0, 0, 0]])))
    assert not is_degenerate(golden["ex2d"])


def test_rejects_bad_stars():
    with pytest.raises(InvalidPolytrope):
        Polytrope(M([[0, 1, 5], [1, 0, 1], [0, 0, 0]]))
    with pytest.raises(InvalidPolytrope):
        Polytrope(M([[0, 1], [1, 0]]))
    with pytest.raises(InvalidPolytrope):
        Polytrope(M([[0]]))


def test_from_points_examples():
    cols = [(0, 1, 0), (1, 0, 0), (2, 2, 0)]
    assert Polytrope.from_points(TropicalMatrix.from_columns(cols)).star == M(EX2D)
    assert Polytrope.from_points(M(SQUARE)).star == M(SQUARE)


def test_from_points_pendant():
    # column 1 violates the triangle property through vertex 2; closure only moves that column
    v = M([[0, 1, 2], [3, 0, 2], [0, 0, 0]])
    star = Polytrope.from_points(v).star
    changed = [j for j in range(3) if star.col(j) != v.col(j)]
    assert changed == [0]
    assert star.col(0) == (0, 2, 0)


@st.composite
def point_matrices(draw):
    d = draw(st.sampled_from([1, 2, 3]))
    return TropicalMatrix.from_rows(
        [[draw(fractions(-10, 10, 3)) for _ in range(d + 1)] for _ in range(d)] + [[0] * (d + 1)]
    )


@given(point_matrices())
def test_from_points_with_negative_points(v):
    try:
        raw = kleene_star(canonical_projection(v))
    except NegativeCycle:
        return
    p = Polytrope.from_points(v)
    assert all(x == 0 for x in p.star.row(p.dim))
    # p is a translate of {x : x_i - x_j <= raw_ij, x_n = 0} by the last row of raw
    n = p.dim + 1
    shift = [raw[n - 1, i] for i in range(p.dim)]
    for y in hrep_vertices(p):
        x = [a - s for a, s in zip(y, shift)] + [0]
        slack = [raw[i, j] - (x[i] - x[j]) for i in range(n) for j in range(n) if i != j]
        assert min(slack) >= 0
        assert slack.count(0) == len(tight_pairs(p, y))


@given(polytropes(max_den=3))
def test_polytrope_invariants(p):
    n = p.dim + 1
    for h in p.hrep:
        assert h.bound == p.star[h.i - 1, h.j - 1]
        assert h.bound == max(c[h.i - 1] - c[h.j - 1] for c in p.star.columns())
    assert all(contains(p, v) for v in p.tropical_vertices())
    assert all(p.star[i, j] + p.star[j, i] >= 0 for i in range(n) for j in range(n))
    assert Polytrope.from_points(p.star).star == p.star
    assert kleene_star(canonical_projection(p.star)) == p.star


def _affine_rank(points):
    if not points:
        return -1
    base = points[0]
    rows = [[Fraction(a - b) for a, b in zip(q, base)] for q in points[1:]]
    rank = 0
    cols = len(base)
    for c in range(cols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


@given(polytropes())
def test_facet_test_matches_affine_rank(p):
    if is_degenerate(p):
        assert facets(p) == []
        return
    verts = hrep_vertices(p)
    for h in p.hrep:
        face = [v for v in verts if tight_pairs(p, v).count(h.pair)]
        assert is_facet(p, h.i, h.j) == (_affine_rank(face) == p.dim - 1)
