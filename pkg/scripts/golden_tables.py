"""Print the per-vertex volume table for every matrix in data/.

    python scripts/golden_tables.py [--objective powers]
"""

import argparse
from pathlib import Path

from polytropes.polytrope import Polytrope
from polytropes.report import parse_matrix, volume_text
from polytropes.volume import ObjectivePolicy, compute_volume

DATA = Path(__file__).resolve().parent.parent / "data"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--objective", choices=("ones", "powers", "random"), default="ones")
    args = ap.parse_args()
    for path in sorted(DATA.glob("*.mat")):
        p = Polytrope(parse_matrix(path.read_text()))
        print(f"== {path.name} (d = {p.dim})")
        print(volume_text(p, compute_volume(p, ObjectivePolicy(first=args.objective))))


if __name__ == "__main__":
    main()
