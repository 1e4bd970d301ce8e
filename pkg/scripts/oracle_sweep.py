"""Compare the vertex-formula volume with the exact low-dimensional oracle on random draws.

    python scripts/oracle_sweep.py --dim 3 --count 500 --max 20 --method rejection
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from polytropes.errors import NonSimple
from polytropes.gen import random_polytropes
from polytropes.oracle import exact_volume_low_dim
from polytropes.volume import compute_volume


@dataclass
class Config:
    dim: int = 3
    count: int = 500
    entry_max: int = 20
    seed: int = 7
    method: str = "closure"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dim", type=int, default=3, choices=(2, 3))
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--max", dest="entry_max", type=int, default=20)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--method", choices=("closure", "rejection"), default="closure")
    cfg = Config(**vars(ap.parse_args()))
    tally = Counter()
    for p in random_polytropes(cfg.dim, cfg.count, cfg.seed, 0, cfg.entry_max, cfg.method):
        try:
            rep = compute_volume(p)
        except NonSimple:
            tally["non-simple"] += 1
            continue
        tally["retries"] += rep.diagnostics.objective_retries
        tally["match" if rep.total == exact_volume_low_dim(p) else "MISMATCH"] += 1
    print(cfg)
    print(dict(tally))


if __name__ == "__main__":
    main()
