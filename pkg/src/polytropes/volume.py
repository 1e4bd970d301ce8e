"""Exact volume of a simple polytrope by summing Lawrence vertex terms.

For a vertex v on facets with normals a_1..a_d and a linear objective
f(x) = c.x + offset, write c = sum gamma_k a_k. The vertex contributes
f(v)^d / (d! * delta * prod gamma_k) where delta = |det[a_1 .. a_d]|.
For polytropes the normals are e_i - e_j, so delta is always 1 and the
gammas are integers.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Optional, Sequence

from .errors import NonSimple, NotUnimodular, ObjectiveExhausted, ZeroGamma
from .exact_num import columns_to_matrix, det_exact, solve_unimodular
from .polytrope import Polytrope, is_degenerate
from .pseudovertex import Pseudovertex, enumerate_pseudovertices, is_simple_vertex, normals_of

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Objective:
    c: tuple
    offset: int = 0
    kind: str = "custom"

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))
        if not any(self.c):
            raise ValueError("objective vector must be nonzero")

    def __call__(self, x: Sequence) -> Fraction:
        return sum((Fraction(ci) * xi for ci, xi in zip(self.c, x)), Fraction(self.offset))

    @classmethod
    def ones(cls, d: int) -> "Objective":
        return cls((1,) * d, kind="ones")

    @classmethod
    def powers(cls, d: int, m: int) -> "Objective":
        return cls(tuple(m**k for k in range(d)), kind="powers")


@dataclass(frozen=True)
class VertexTerm:
    vertex: Pseudovertex
    normals: tuple
    f_value: Fraction
    gammas: tuple
    delta: int
    term: Fraction


@dataclass
class Diagnostics:
    pseudovertices_enumerated: int = 0
    duplicates_merged: int = 0
    objective_retries: int = 0
    degenerate: bool = False


@dataclass
class VolumeReport:
    terms: list
    total: Fraction
    objective: Optional[Objective]
    diagnostics: Diagnostics = field(default_factory=Diagnostics)


@dataclass(frozen=True)
class ObjectivePolicy:
    """Which objectives to try, in order, until none hits a zero gamma.

    ``first`` is one of "ones", "powers", "random". After it, the ladder
    falls back to powers and then ``random_tries`` seeded random vectors.
    """

    first: str = "ones"
    seed: int = 0
    random_tries: int = 8
    random_range: int = 1000


def powers_base(p: Polytrope) -> int:
    """``M = 1 + 2 * (max |b_ij| + 1)`` for the powers objective."""
    bmax = max(abs(x) for row in p.star.entries for x in row)
    return 1 + 2 * (math.ceil(bmax) + 1)


def objective_ladder(p: Polytrope, policy: ObjectivePolicy) -> list:
    d = p.dim
    rng = random.Random(policy.seed)

    def rand_obj():
        while True:
            c = [rng.randint(-policy.random_range, policy.random_range) for _ in range(d)]
            if any(c):
                return Objective(tuple(c), kind="random")

    ladder = []
    if policy.first == "ones":
        ladder.append(Objective.ones(d))
    elif policy.first == "powers":
        pass
    elif policy.first == "random":
        ladder.append(rand_obj())
    else:
        raise ValueError(f"unknown objective policy {policy.first!r}")
    ladder.append(Objective.powers(d, powers_base(p)))
    ladder.extend(rand_obj() for _ in range(policy.random_tries))
    return ladder


def vertex_term(v: Pseudovertex, normals: Sequence, obj: Objective, d: int) -> VertexTerm:
    a = columns_to_matrix(normals)
    delta = abs(det_exact(a))
    if delta != 1:
        raise NotUnimodular(f"normal determinant at {v.point} is {delta}, expected 1")
    gammas = tuple(solve_unimodular(a, obj.c))
    if any(g == 0 for g in gammas):
        raise ZeroGamma(f"objective {obj.c} is constant on an edge at vertex {v.point}")
    fv = obj(v.point)
    term = fv**d / (factorial(d) * delta * prod(gammas))
    return VertexTerm(v, tuple(tuple(n) for n in normals), fv, gammas, delta, Fraction(term))


def _terms_for(p: Polytrope, vertices: list, obj: Objective) -> list:
    return [vertex_term(v, normals_of(p, v.tight), obj, p.dim) for v in vertices]


def compute_volume(
    p: Polytrope,
    policy: Optional[ObjectivePolicy] = None,
    objective: Optional[Objective] = None,
) -> VolumeReport:
    """Volume of ``p`` with per-vertex terms.

    Passing ``objective`` bypasses the retry ladder; a zero gamma then
    propagates as :class:`ZeroGamma`.
    """
    policy = policy or ObjectivePolicy()
    diag = Diagnostics()
    if is_degenerate(p):
        diag.degenerate = True
        return VolumeReport([], Fraction(0), objective, diag)

    vertices = enumerate_pseudovertices(p)
    n_gen = sum(len(v.generators) for v in vertices)
    diag.pseudovertices_enumerated = n_gen
    diag.duplicates_merged = n_gen - len(vertices)
    bad = [v for v in vertices if not is_simple_vertex(p, v)]
    if bad:
        v = bad[0]
        raise NonSimple(
            f"{len(bad)} vertices are not simple; e.g. {tuple(str(x) for x in v.point)} "
            f"lies on {len(v.tight)} facets in dimension {p.dim}"
        )

    if objective is not None:
        terms = _terms_for(p, vertices, objective)
        return VolumeReport(terms, sum((t.term for t in terms), Fraction(0)), objective, diag)

    for attempt, obj in enumerate(objective_ladder(p, policy)):
        try:
            terms = _terms_for(p, vertices, obj)
        except ZeroGamma as exc:
            log.info("objective %s rejected: %s", obj.c, exc)
            diag.objective_retries += 1
            continue
        return VolumeReport(terms, sum((t.term for t in terms), Fraction(0)), obj, diag)
    raise ObjectiveExhausted(f"every objective hit a zero gamma after {diag.objective_retries} tries")


def volume(p: Polytrope) -> Fraction:
    return compute_volume(p).total
