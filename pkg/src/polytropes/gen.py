"""Seeded random polytropes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GenerationExhausted, NegativeCycle
from .polytrope import Polytrope
from .trop_core import TropicalMatrix


@dataclass(frozen=True)
class GenConfig:
    dim: int
    entry_min: int = 0
    entry_max: int = 100
    seed: int = 0
    max_retries: int = 100
    method: str = "closure"

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if self.entry_min > self.entry_max:
            raise ValueError("entry_min must not exceed entry_max")
        if self.method not in ("closure", "rejection"):
            raise ValueError(f"unknown generation method {self.method!r}")


def _draw(rng: np.random.Generator, cfg: GenConfig) -> TropicalMatrix:
    n = cfg.dim + 1
    m = rng.integers(cfg.entry_min, cfg.entry_max, size=(n, n), endpoint=True).tolist()
    for i in range(n):
        m[i][i] = 0
    m[n - 1] = [0] * n
    return TropicalMatrix.from_rows(m)


def _draw_star(rng: np.random.Generator, cfg: GenConfig, batch: int = 1024) -> TropicalMatrix:
    # uniform over Kleene stars in the box: the closure method instead lands
    # on equalities b_ij = b_ik + b_kj with positive probability
    n = cfg.dim + 1
    idx = np.arange(n)
    for _ in range(cfg.max_retries):
        a = rng.integers(cfg.entry_min, cfg.entry_max, size=(batch, n, n), endpoint=True)
        a[:, idx, idx] = 0
        a[:, n - 1, :] = 0
        ok = (a[:, :, :, None] + a[:, None, :, :] >= a[:, :, None, :]).all(axis=(1, 2, 3))
        hits = np.flatnonzero(ok)
        if hits.size:
            return TropicalMatrix.from_rows(a[hits[0]].tolist())
    raise GenerationExhausted(
        f"no Kleene star among {cfg.max_retries * batch} draws for {cfg}"
    )


def random_polytrope(cfg: GenConfig) -> Polytrope:
    """Random polytrope, deterministic in ``cfg``.

    ``closure``: random off-diagonal entries, zero diagonal and last row, then
    the Kleene star via :meth:`Polytrope.from_points`. Negative cycles (only
    possible with ``entry_min < 0``) trigger a redraw.

    ``rejection``: the same draw, kept only if it is already a Kleene star.
    """
    rng = np.random.default_rng(cfg.seed)
    if cfg.method == "rejection":
        return Polytrope(_draw_star(rng, cfg))
    for _ in range(cfg.max_retries):
        try:
            return Polytrope.from_points(_draw(rng, cfg))
        except NegativeCycle:
            continue
    raise GenerationExhausted(f"no bounded draw after {cfg.max_retries} attempts for {cfg}")


def random_polytropes(
    dim: int,
    count: int,
    seed: int = 0,
    entry_min: int = 0,
    entry_max: int = 100,
    method: str = "closure",
):
    """``count`` polytropes from independent child seeds of ``seed``."""
    for child in np.random.SeedSequence(seed).spawn(count):
        child_seed = int(child.generate_state(1, np.uint64)[0])
        yield random_polytrope(GenConfig(dim, entry_min, entry_max, child_seed, method=method))
