"""Fraction of random polytropes that are maximal / simple, per generator.

    python scripts/maximality_stats.py --dim 3 --count 1000 --max 1000000
"""

import argparse
import time
from dataclasses import dataclass

from polytropes.gen import random_polytropes
from polytropes.pseudovertex import enumerate_pseudovertices, is_maximal, is_simple


@dataclass
class Config:
    dim: int = 3
    count: int = 1000
    entry_max: int = 10**6
    seed: int = 0


def run(cfg: Config, method: str) -> dict:
    t0 = time.perf_counter()
    maximal = simple = 0
    for p in random_polytropes(cfg.dim, cfg.count, cfg.seed, 0, cfg.entry_max, method):
        vs = enumerate_pseudovertices(p)
        maximal += is_maximal(p)
        simple += is_simple(p, vs)
    return dict(method=method, maximal=maximal / cfg.count, simple=simple / cfg.count, secs=time.perf_counter() - t0)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dim", type=int, default=3)
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--max", dest="entry_max", type=int, default=10**6)
    ap.add_argument("--seed", type=int, default=0)
    cfg = Config(**vars(ap.parse_args()))
    print(f"d={cfg.dim} count={cfg.count} entries in [0, {cfg.entry_max}] seed={cfg.seed}")
    for method in ("closure", "rejection"):
        r = run(cfg, method)
        print(f"{r['method']:>9}: maximal {r['maximal']:.1%}  simple {r['simple']:.1%}  ({r['secs']:.1f}s)")


if __name__ == "__main__":
    main()
