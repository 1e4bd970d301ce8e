"""Exact integer linear algebra for the vertex terms.

Matrices are plain lists of integer rows. Determinants use fraction-free
Bareiss elimination so intermediate values stay integral.
"""

from __future__ import annotations

from typing import Sequence

from .errors import NotUnimodular, Singular


def det_exact(a: Sequence[Sequence[int]]) -> int:
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("det_exact needs a square matrix")
    if n == 0:
        return 1
    m = [[int(x) for x in r] for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            # pivot swap; a zero column below means the determinant vanishes
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def columns_to_matrix(cols: Sequence[Sequence[int]]) -> list:
    """Build the row-major matrix whose columns are ``cols``."""
    return [list(r) for r in zip(*cols)]


def solve_unimodular(a: Sequence[Sequence[int]], c: Sequence[int]) -> list:
    """Solve ``a @ x = c`` for integral ``x`` when ``|det a| == 1``.

    Uses Cramer's rule with exact integer determinants; with a unit
    determinant every component is an integer.
    """
    n = len(a)
    if len(c) != n:
        raise ValueError("right-hand side length does not match matrix")
    d = det_exact(a)
    if d == 0:
        raise Singular("matrix is singular")
    if abs(d) != 1:
        raise NotUnimodular(f"determinant {d} is not +-1")
    x = []
    for k in range(n):
        ak = [list(r) for r in a]
        for i in range(n):
            ak[i][k] = c[i]
        x.append(det_exact(ak) * d)  # d == 1/d for d in {1, -1}
    assert all(sum(a[i][j] * x[j] for j in range(n)) == c[i] for i in range(n))
    return x
