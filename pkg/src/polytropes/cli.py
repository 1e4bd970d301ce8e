"""Command-line front end.

    polytropes volume --input ex2d.mat
    polytropes check --input square.mat --format json
    polytropes random --dim 3 --seed 42

Exit status: 0 on success, 1 on domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import report as rp
from .errors import PolytropeError
from .gen import GenConfig, random_polytrope
from .oracle import cross_check
from .polytrope import Polytrope, is_degenerate
from .pseudovertex import enumerate_pseudovertices, is_maximal, is_simple
from .render import render_svg_2d
from .trop_core import is_kleene_star, kleene_star, kleene_star_violations
from .volume import ObjectivePolicy, compute_volume


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", default="-", help="matrix file, '-' for stdin")
    common.add_argument("--format", "-f", choices=("text", "json", "csv"), default="text")
    common.add_argument("--points", action="store_true", help="input columns are arbitrary vertices, not a star")
    common.add_argument("--objective", choices=("ones", "powers", "random"), default="ones")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=200_000)
    common.add_argument("--out", "-o", default=None, help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="polytropes", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("star", parents=[common], help="print the Kleene star (closure) of the input")
    sub.add_parser("hrep", parents=[common], help="half-space representation")
    sub.add_parser("pv", parents=[common], help="pseudovertex table")
    sub.add_parser("volume", parents=[common], help="exact volume with per-vertex terms")
    sub.add_parser("check", parents=[common], help="Kleene / degenerate / maximal / simple flags")
    sub.add_parser("cross-check", parents=[common], help="compare volume against independent oracles")
    sub.add_parser("render", parents=[common], help="SVG drawing (d = 2)")
    r = sub.add_parser("random", parents=[common], help="emit a random polytrope's star")
    r.add_argument("--dim", type=int, default=3)
    r.add_argument("--min", dest="entry_min", type=int, default=0)
    r.add_argument("--max", dest="entry_max", type=int, default=100)
    r.add_argument("--method", choices=("closure", "rejection"), default="closure")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(args):
    m = rp.parse_matrix(_read(args.input))
    if args.points:
        return Polytrope.from_points(m)
    return Polytrope(m)


def _emit_matrix(p, fmt) -> str:
    if fmt == "json":
        return rp.to_json({"dim": p.dim, "star": rp.star_dict(p)})
    if fmt == "csv":
        return rp.star_csv(p)
    return rp.format_matrix(p.star)


def cmd_star(args) -> str:
    m = rp.parse_matrix(_read(args.input))
    if args.points:
        return _emit_matrix(Polytrope.from_points(m), args.format)
    s = kleene_star(m)
    if args.format == "json":
        return rp.to_json({"star": [[rp.rat(x) for x in r] for r in s.entries]})
    if args.format == "csv":
        return rp._csv([f"c{j + 1}" for j in range(s.cols)], [[rp.rat(x) for x in r] for r in s.entries])
    return rp.format_matrix(s)


def cmd_hrep(args) -> str:
    p = _load(args)
    if args.format == "json":
        return rp.to_json({"dim": p.dim, "hrep": rp.hrep_dict(p)})
    if args.format == "csv":
        return rp.hrep_csv(p)
    return rp.hrep_text(p)


def cmd_pv(args) -> str:
    p = _load(args)
    vs = enumerate_pseudovertices(p)
    if args.format == "json":
        return rp.to_json({"dim": p.dim, "pseudovertices": [rp.pseudovertex_dict(v) for v in vs]})
    if args.format == "csv":
        return rp.pv_csv(vs)
    return rp.pv_text(p, vs)


def cmd_volume(args) -> str:
    p = _load(args)
    rep = compute_volume(p, ObjectivePolicy(first=args.objective, seed=args.seed))
    if args.format == "json":
        return rp.to_json(rp.volume_dict(p, rep))
    if args.format == "csv":
        return rp.volume_csv(rep)
    return rp.volume_text(p, rep)


def cmd_check(args) -> str:
    m = rp.parse_matrix(_read(args.input))
    if args.points:
        m = Polytrope.from_points(m).star
    flags = {"kleene": is_kleene_star(m)}
    problems = kleene_star_violations(m)
    if flags["kleene"] and all(x == 0 for x in m.row(m.rows - 1)):
        p = Polytrope(m)
        flags["degenerate"] = is_degenerate(p)
        flags["maximal"] = is_maximal(p)
        flags["simple"] = None if flags["degenerate"] else is_simple(p)
    else:
        if flags["kleene"]:
            problems = ["last row is not zero"]
        flags.update(degenerate=None, maximal=None, simple=None)
    if args.format == "json":
        return rp.to_json(dict(flags, problems=problems))
    show = lambda v: "n/a" if v is None else str(v).lower()
    if args.format == "csv":
        return rp._csv(list(flags), [[show(v) for v in flags.values()]])
    text = " ".join(f"{k}={show(v)}" for k, v in flags.items()) + "\n"
    return text + "".join(f"  {msg}\n" for msg in problems)


def cmd_cross_check(args) -> str:
    p = _load(args)
    rep = cross_check(p, samples=args.samples, seed=args.seed)
    args._status = 0 if rep.passed else 1
    data = {
        "dim": rep.dim,
        "default_total": rp.rat(rep.default_total),
        "alt_total": rp.rat(rep.alt_total),
        "exact_total": None if rep.exact_total is None else rp.rat(rep.exact_total),
        "checks": [{"name": n, "passed": ok, "detail": det} for n, ok, det in rep.checks],
        "warnings": rep.warnings,
        "passed": rep.passed,
    }
    if rep.mc is not None:
        data["monte_carlo"] = {
            "estimate_float": float(rep.mc.estimate),
            "stderr_float": rep.mc.stderr,
            "samples": rep.mc.samples,
            "hits": rep.mc.hits,
            "seed": rep.mc.seed,
        }
    if args.format == "json":
        return rp.to_json(data)
    if args.format == "csv":
        return rp._csv(["check", "passed", "detail"], [[n, ok, det] for n, ok, det in rep.checks])
    lines = [f"volume (c = default)  = {rep.default_total}", f"volume (c = powers)   = {rep.alt_total}"]
    if rep.exact_total is not None:
        lines.append(f"exact oracle          = {rep.exact_total}")
    if rep.mc is not None:
        lines.append(
            f"monte carlo (float)   = {float(rep.mc.estimate):.6g} +- {rep.mc.stderr:.3g} "
            f"(samples={rep.mc.samples}, seed={rep.mc.seed})"
        )
    lines += [f"[{'PASS' if ok else 'FAIL'}] {n}: {det}" for n, ok, det in rep.checks]
    lines += [f"[WARN] {w}" for w in rep.warnings]
    lines.append("overall: " + ("PASS" if rep.passed else "FAIL"))
    return "\n".join(lines) + "\n"


def cmd_render(args) -> str:
    return render_svg_2d(_load(args))


def cmd_random(args) -> str:
    try:
        cfg = GenConfig(args.dim, args.entry_min, args.entry_max, args.seed, method=args.method)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _emit_matrix(random_polytrope(cfg), args.format)


HANDLERS = {
    "star": cmd_star,
    "hrep": cmd_hrep,
    "pv": cmd_pv,
    "volume": cmd_volume,
    "check": cmd_check,
    "cross-check": cmd_cross_check,
    "render": cmd_render,
    "random": cmd_random,
}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._status = 0
    try:
        out = HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"polytropes: {exc}", file=sys.stderr)
        return 2
    except PolytropeError as exc:
        print(f"polytropes: error in {exc.module}: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return args._status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
