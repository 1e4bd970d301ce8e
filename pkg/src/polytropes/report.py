"""Matrix text format and report serialisation (text, JSON, CSV).

Matrix files hold one row per line (or ``;``-separated), entries split by
whitespace or commas. Entries are integers, fractions ``p/q`` or ``inf``.
Machine-readable output writes every rational as an exact ``"p/q"`` string.
"""

from __future__ import annotations

import csv
import io
import json
import re
from fractions import Fraction

from .errors import ParseError, RaggedRows
from .trop_core import INF, TropicalMatrix

_NUMBER = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


def parse_scalar(tok: str, line=None, column=None):
    t = tok.strip()
    if t.lower() in ("inf", "+inf", "infinity"):
        return INF
    if not _NUMBER.match(t):
        raise ParseError(f"bad entry {tok!r}", line, column)
    try:
        return Fraction(t)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {tok!r}", line, column) from None


def parse_matrix(text: str) -> TropicalMatrix:
    rows = []
    widths = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        for chunk in line.split(";"):
            if not chunk.strip():
                continue
            row = []
            col = 0
            for m in re.finditer(r"[^\s,]+", chunk):
                col += 1
                row.append(parse_scalar(m.group(), lineno, col))
            rows.append(row)
            widths.append((lineno, len(row)))
    if not rows:
        raise ParseError("no matrix rows found")
    for lineno, w in widths:
        if w != widths[0][1]:
            raise RaggedRows(f"row has {w} entries, expected {widths[0][1]}", lineno)
    return TropicalMatrix.from_rows(rows)


def format_scalar(x) -> str:
    return "inf" if x is INF else str(x)


def format_matrix(m: TropicalMatrix) -> str:
    cells = [[format_scalar(x) for x in r] for r in m.entries]
    width = max((len(c) for r in cells for c in r), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells) + "\n"


def rat(x) -> str:
    """Exact ``p/q`` string; the denominator is always present."""
    if x is INF:
        return "inf"
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(s: str) -> Fraction:
    return Fraction(s)


def fmt_point(pt) -> str:
    return "(" + ", ".join(str(x) for x in pt) + ")"


def fmt_generators(gens) -> str:
    return " ".join("(" + ", ".join(f"v{i}" for i in g) + ")" for g in gens)


# --- report dictionaries ---------------------------------------------------


def star_dict(p) -> list:
    return [[rat(x) for x in r] for r in p.star.entries]


def hrep_dict(p) -> list:
    return [{"i": h.i, "j": h.j, "normal": list(h.normal), "bound": rat(h.bound)} for h in p.hrep]


def pseudovertex_dict(v) -> dict:
    return {
        "point": [rat(x) for x in v.point],
        "generators": [list(g) for g in v.generators],
        "tight": [list(t) for t in v.tight],
    }


def volume_dict(p, report) -> dict:
    pvs = []
    for t in report.terms:
        entry = pseudovertex_dict(t.vertex)
        entry.update(
            normals=[list(n) for n in t.normals],
            f_value=rat(t.f_value),
            gammas=list(t.gammas),
            delta=t.delta,
            term=rat(t.term),
        )
        pvs.append(entry)
    obj = report.objective
    diag = report.diagnostics
    return {
        "dim": p.dim,
        "star": star_dict(p),
        "hrep": hrep_dict(p),
        "pseudovertices": pvs,
        "total": rat(report.total),
        "objective": None if obj is None else {"c": list(obj.c), "offset": obj.offset, "kind": obj.kind},
        "diagnostics": {
            "pseudovertices_enumerated": diag.pseudovertices_enumerated,
            "duplicates_merged": diag.duplicates_merged,
            "objective_retries": diag.objective_retries,
            "degenerate": diag.degenerate,
        },
    }


def to_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def total_from_json(text: str) -> Fraction:
    return parse_rat(json.loads(text)["total"])


# --- text tables -----------------------------------------------------------


def _table(header: list, rows: list) -> str:
    widths = [max(len(str(c)) for c in col) for col in zip(header, *rows)]
    line = lambda r: " | ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip()
    sep = "-+-".join("-" * w for w in widths)
    return "\n".join([line(header), sep] + [line(r) for r in rows]) + "\n"


def volume_text(p, report) -> str:
    if report.diagnostics.degenerate:
        return "degenerate polytrope (zero width)\ntotal = 0\n"
    rows = []
    for t in report.terms:
        rows.append(
            [
                fmt_generators(t.vertex.generators),
                fmt_point(t.vertex.point),
                " ".join(fmt_point(n) for n in t.normals),
                t.delta,
                t.f_value,
                " ".join(str(g) for g in t.gammas),
                t.term,
            ]
        )
    header = ["Cramer", "Pseudovertex", "Facet normals", "delta", "f(v)", "gamma", "N_v"]
    obj = report.objective
    lines = _table(header, rows)
    lines += f"objective c = {fmt_point(obj.c)}\n"
    d = report.diagnostics
    if d.objective_retries:
        lines += f"objective retries = {d.objective_retries}\n"
    return lines + f"total = {report.total}\n"


def hrep_text(p) -> str:
    rows = [[f"x{h.i} - x{h.j}", fmt_point(h.normal), h.bound] for h in p.hrep]
    return _table(["constraint", "normal", "bound"], rows)


def pv_text(p, vertices) -> str:
    from .pseudovertex import normals_of

    rows = [
        [fmt_generators(v.generators), fmt_point(v.point), " ".join(fmt_point(n) for n in normals_of(p, v.tight))]
        for v in vertices
    ]
    return _table(["Cramer", "Pseudovertex", "Facet normals"], rows)


# --- CSV -------------------------------------------------------------------


def _csv(header: list, rows: list) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _pairs(ps) -> str:
    return " ".join(f"({i},{j})" for i, j in ps)


def star_csv(p) -> str:
    return _csv([f"c{j + 1}" for j in range(p.star.cols)], star_dict(p))


def hrep_csv(p) -> str:
    return _csv(["i", "j", "bound"], [[h.i, h.j, rat(h.bound)] for h in p.hrep])


def pv_csv(vertices) -> str:
    rows = [
        [fmt_generators(v.generators), " ".join(rat(x) for x in v.point), _pairs(v.tight)]
        for v in vertices
    ]
    return _csv(["generators", "point", "tight"], rows)


def volume_csv(report) -> str:
    rows = [
        [
            fmt_generators(t.vertex.generators),
            " ".join(rat(x) for x in t.vertex.point),
            _pairs(t.vertex.tight),
            rat(t.f_value),
            " ".join(str(g) for g in t.gammas),
            t.delta,
            rat(t.term),
        ]
        for t in report.terms
    ]
    rows.append(["total", "", "", "", "", "", rat(report.total)])
    return _csv(["generators", "point", "tight", "f_value", "gammas", "delta", "term"], rows)
