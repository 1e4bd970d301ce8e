"""End-to-end acceptance criteria.

Each test records one PASS/FAIL line (shown in the terminal summary) and then
asserts, except criterion 8, which is a statistical flag and only warns.
"""

import itertools
import os
import time
import warnings
from collections import Counter
from fractions import Fraction
from math import comb

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from golden import TABLES, VOLUMES
from polytropes.exact_num import columns_to_matrix, det_exact
from polytropes.gen import random_polytropes
from polytropes.oracle import exact_volume_low_dim, monte_carlo_volume
from polytropes.polytrope import is_degenerate
from polytropes.pseudovertex import enumerate_pseudovertices, is_maximal, is_simple, normals_of
from polytropes.trop_core import (
    INF,
    TropicalMatrix,
    is_kleene_star,
    kleene_star,
    mat_trop_add,
    mat_trop_mul,
    tdet_min,
)
from polytropes.volume import Objective, compute_volume, powers_base

GOLDEN_3D = ["ex3d", "m152", "m5066", "m1191_2", "m970"]
MC_SEED = 0
MAXIMAL_THRESHOLD = float(os.environ.get("POLYTROPES_MAXIMAL_THRESHOLD", "0.95"))


def record(n, ok, detail, hard=True):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    if hard:
        assert ok, line


def test_1_golden_volumes(golden):
    got = {name: compute_volume(golden[name]).total for name in VOLUMES}
    bad = {k: str(v) for k, v in got.items() if v != VOLUMES[k]}
    record(1, not bad, f"{len(got)} golden volumes exact" if not bad else f"mismatch {bad}")


def _row_mismatches(p, rows):
    d = p.dim
    ones = [1] * d
    rep = compute_volume(p)
    out = []
    if len(rep.terms) != len(rows):
        return [f"{len(rep.terms)} vertices, table has {len(rows)}"]
    for t, (gen, pt, normals, f, gammas, (num, den)) in zip(rep.terms, rows):
        a = columns_to_matrix(normals)
        checks = {
            "generator": t.vertex.generators[0] == gen,
            "point": t.vertex.point == pt,
            "normals": t.normals == normals,
            "delta": t.delta == 1 and abs(det_exact(a)) == 1,
            "f": t.f_value == f,
            "term": t.term == Fraction(num, den) / (2 if d == 2 else 6),
            # gammas must solve c = sum gamma_k a_k for the stated normals;
            # the printed order is compared as a multiset
            "gamma": Counter(t.gammas) == Counter(gammas)
            and [sum(r[k] * t.gammas[k] for k in range(d)) for r in a] == ones,
        }
        out += [f"{gen} {k}" for k, ok in checks.items() if not ok]
    return out


def test_2_golden_tables(golden):
    bad = []
    n_rows = 0
    for name in ("ex2d", "ex3d", "ex3d_alt"):
        key, rows = TABLES[name]
        n_rows += len(rows)
        bad += [f"{name}: {m}" for m in _row_mismatches(golden[key], rows)]
    record(2, not bad, f"{n_rows} table rows match" if not bad else "; ".join(bad[:5]))


def test_3_pseudovertex_bound(golden):
    over = []
    iff = []
    for d in (2, 3):
        for k, p in enumerate(random_polytropes(d, 1000, seed=2024)):
            n = len(enumerate_pseudovertices(p))
            if n > comb(2 * d, d):
                over.append((d, k, n))
            if (n == comb(2 * d, d)) != is_maximal(p):
                iff.append((d, k))
    eq = [len(enumerate_pseudovertices(golden[x])) for x in ("ex2d", "ex3d")]
    ok = not over and not iff and eq == [6, 20]
    record(3, ok, f"2000 draws within C(2d,d); golden counts {eq}" if ok else f"over={over[:3]} iff={iff[:3]} golden={eq}")


def test_4_oracle_equivalence():
    target = 500
    lines = []
    bad = []
    for d in (2, 3):
        simple = skipped = 0
        for p in random_polytropes(d, 10 * target, seed=99):
            if simple == target:
                break
            if is_degenerate(p) or not is_simple(p):
                skipped += 1
                continue
            simple += 1
            a, b = compute_volume(p).total, exact_volume_low_dim(p)
            if a != b:
                bad.append((d, p.star.tolist(), a, b))
        drawn = simple + skipped
        lines.append(f"d={d}: {simple} simple, skipped {skipped}/{drawn} non-simple or degenerate ({skipped / drawn:.1%})")
        if simple < target:
            bad.append((d, "too few simple draws"))
    record(4, not bad, "; ".join(lines) if not bad else f"{bad[:2]}")


def test_5_monte_carlo(golden):
    mc = monte_carlo_volume(golden["ex4d"], samples=1_000_000, seed=MC_SEED)
    z = (float(mc.estimate) - 2586879) / mc.stderr
    record(5, abs(z) <= 3, f"estimate {float(mc.estimate):.6g} +- {mc.stderr:.3g} (z = {z:+.2f}, seed {MC_SEED})")


def test_6_objective_invariance(golden):
    bad = []
    for name in ["ex2d"] + GOLDEN_3D + ["ex4d"]:
        p = golden[name]
        a = compute_volume(p, objective=Objective.ones(p.dim)).total
        b = compute_volume(p, objective=Objective.powers(p.dim, powers_base(p))).total
        if a != b:
            bad.append((name, a, b))
    record(6, not bad, "ones and powers totals equal on all goldens" if not bad else str(bad))


def _series(a):
    n = a.rows
    acc = power = TropicalMatrix.identity(n)
    for _ in range(n - 1):
        power = mat_trop_mul(power, a)
        acc = mat_trop_add(acc, power)
    return acc


def _tdet_by_cycles(rows):
    # permutations built from scratch via recursion over used columns
    n = len(rows)
    best = INF

    def go(i, used, acc):
        nonlocal best
        if i == n:
            best = acc if best is INF or acc < best else best
            return
        for j in range(n):
            if j not in used and rows[i][j] is not INF:
                go(i + 1, used | {j}, acc + rows[i][j])

    go(0, frozenset(), Fraction(0))
    return best


def test_7_algebraic_properties():
    rng = np.random.default_rng(7)
    fails = Counter()
    for _ in range(300):
        n = int(rng.integers(2, 7))
        raw = rng.integers(-2, 15, size=(n, n)).tolist()
        mask = rng.random((n, n)) < 0.2
        a = TropicalMatrix.from_rows([[INF if mask[i][j] else raw[i][j] for j in range(n)] for i in range(n)])
        try:
            s = kleene_star(a)
        except Exception:
            continue
        fails["idempotence"] += kleene_star(s) != s
        fails["series"] += s != _series(a)
        if all(x is not INF for r in s.entries for x in r):
            fails["is_kleene_star"] += not is_kleene_star(s)
        m = min(n, 4)
        sub = TropicalMatrix.from_rows([r[:m] for r in a.entries[:m]])
        fails["tdet"] += tdet_min(sub) != _tdet_by_cycles([list(r) for r in sub.entries])
    draws = 0
    for d in (2, 3, 4):
        for method in ("closure", "rejection"):
            for p in random_polytropes(d, 60, seed=3, method=method):
                draws += 1
                fails["is_kleene_star"] += not is_kleene_star(p.star)
                fails["hrep"] += any(h.bound != p.b(h.i, h.j) for h in p.hrep)
                vs = enumerate_pseudovertices(p)
                for v in vs:
                    if len(v.tight) == d:
                        fails["unimodular"] += abs(det_exact(columns_to_matrix(normals_of(p, v.tight)))) != 1
                if is_maximal(p):
                    fails["maximal=>simple"] += not is_simple(p, vs)
    bad = {k: v for k, v in fails.items() if v}
    record(7, not bad, f"300 matrices, {draws} polytropes, all properties hold" if not bad else str(bad))


def test_8_statistical_maximality():
    start = time.perf_counter()
    rate = sum(is_maximal(p) for p in random_polytropes(3, 1000, seed=8, entry_max=10**6, method="rejection")) / 1000
    closure = sum(is_maximal(p) for p in random_polytropes(3, 200, seed=8, entry_max=10**6)) / 200
    ok = rate >= MAXIMAL_THRESHOLD
    detail = (
        f"{rate:.1%} maximal with uniform Kleene stars (threshold {MAXIMAL_THRESHOLD:.0%}); "
        f"closure-of-random-matrix generator gives {closure:.1%} ({time.perf_counter() - start:.1f}s)"
    )
    record(8, ok, detail, hard=False)
    if not ok:
        warnings.warn(f"maximality flag: {detail}")
