"""Monte Carlo error against the exact volume as the sample count doubles.

    python scripts/mc_convergence.py data/ex2d.mat --start 1000 --steps 8 --reps 20
"""

import argparse
import statistics
from dataclasses import dataclass
from pathlib import Path

from polytropes.oracle import monte_carlo_volume
from polytropes.polytrope import Polytrope
from polytropes.report import parse_matrix
from polytropes.volume import volume


@dataclass
class Config:
    path: str
    start: int = 1000
    steps: int = 8
    reps: int = 20


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("path")
    ap.add_argument("--start", type=int, default=1000)
    ap.add_argument("--steps", type=int, default=8)
    ap.add_argument("--reps", type=int, default=20)
    cfg = Config(**vars(ap.parse_args()))
    p = Polytrope(parse_matrix(Path(cfg.path).read_text()))
    exact = float(volume(p))
    print(f"exact volume {exact:.6g}")
    print(f"{'samples':>9} {'mean |err|':>11} {'mean stderr':>12} {'within 3se':>10}")
    n = cfg.start
    for _ in range(cfg.steps):
        runs = [monte_carlo_volume(p, n, seed) for seed in range(cfg.reps)]
        errs = [abs(float(r.estimate) - exact) for r in runs]
        inside = sum(r.agrees_with(exact) for r in runs)
        print(f"{n:>9} {statistics.mean(errs):>11.4g} {statistics.mean(r.stderr for r in runs):>12.4g} {inside:>7}/{cfg.reps}")
        n *= 2


if __name__ == "__main__":
    main()
