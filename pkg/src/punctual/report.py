"""JSON documents and aligned-text tables for cells, strata and checks."""
import json

from .combinatorics import HilbertFunction, Partition
from .decomposition import Cell, cell
from .hbmatrix import EMPTY, ParamShape, cell_dimension, param_names
from .polys import PolyRing
from .symbolic import betti_strata, constant_term_matrix

XY = PolyRing(("x", "y"))


def monomial_str(e) -> str:
    a, b = e
    parts = [v if k == 1 else f"{v}^{k}" for v, k in (("x", a), ("y", b)) if k]
    return "*".join(parts) or "1"


def parse_monomial(text: str) -> tuple:
    p = XY.parse(text)
    if len(p.terms) != 1:
        raise ValueError(f"{text!r} is not a monomial")
    return next(iter(p.terms))


def matrix_strs(M) -> list:
    return [[str(e) for e in row] for row in M]


def cell_ring(c: Cell) -> PolyRing:
    return PolyRing(("x", "y") + param_names(len(c.index)))


def cell_to_dict(c: Cell) -> dict:
    return {
        "m": list(c.m),
        "E": [monomial_str(e) for e in c.E],
        "d": list(c.d),
        "U": [list(row) for row in c.U],
        "hilb": list(c.hilb),
        "H": matrix_strs(c.H),
        "M": matrix_strs(c.M),
        "N": {
            "kind": c.shape.kind,
            "windows": [[[lo, hi] if lo <= hi else None for lo, hi in row] for row in c.shape.windows],
            "params": [list(p) for p in c.index],
        },
        "I": [str(g) for g in c.I],
        "dim": c.dim,
        "dim_hom": c.dim_hom,
        "proven": c.proven,
        "mu": list(c.mu),
    }


def cell_from_dict(doc: dict) -> Cell:
    """Rebuild a :class:`Cell` from its JSON form, polynomials included."""
    m = Partition(doc["m"])
    t = len(m)
    windows = tuple(
        tuple((w[0], w[1]) if w is not None else EMPTY for w in row)
        for row in doc["N"]["windows"]
    )
    if len(windows) != t + 1:
        raise ValueError("window array has the wrong number of rows")
    shape = ParamShape(m, doc["N"]["kind"], windows)
    c = Cell(
        m=m,
        E=tuple(parse_monomial(s) for s in doc["E"]),
        d=tuple(doc["d"]),
        U=tuple(tuple(row) for row in doc["U"]),
        hilb=HilbertFunction(doc["hilb"]),
        shape=shape,
        index=tuple(tuple(p) for p in doc["N"]["params"]),
        dim=doc["dim"],
        dim_hom=doc["dim_hom"],
        proven=doc["proven"],
    )
    ring = cell_ring(c)
    c.__dict__["H"] = [[XY.parse(s) for s in row] for row in doc["H"]]
    c.__dict__["_generic"] = [[ring.parse(s) for s in row] for row in doc["M"]]
    c.__dict__["I"] = tuple(ring.parse(s) for s in doc["I"])
    if "mu" in doc:
        c.__dict__["mu"] = tuple(doc["mu"])
    return c


def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


# -- text tables -----------------------------------------------------------

def render_matrix(M) -> list:
    cells = matrix_strs(M)
    widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
    return ["[ " + "  ".join(s.ljust(w) for s, w in zip(row, widths)) + " ]" for row in cells]


def _param_list(ks) -> str:
    return ",".join(f"c{k}" for k in ks) or "-"


def render_cells(groups: dict, header) -> str:
    """One block per cell: partition, H + N, dimension, μ values, homogeneous parameters."""
    out = []
    for key, cells in groups.items():
        out.append(f"== {header(key)} ==")
        out.append("")
        for c in cells:
            mat = render_matrix(c.M)
            mcol = str(list(c.m))
            width = max(len(mcol), 1) + 2
            info = f"dim {c.dim}   mu {','.join(map(str, c.mu))}   hom {_param_list(c.hom_params)}"
            if not c.proven:
                info += "   (conjectural)"
            mat_width = max(len(line) for line in mat)
            for k, line in enumerate(mat):
                left = mcol if k == 0 else ""
                right = info if k == 0 else ""
                out.append((left.ljust(width) + line.ljust(mat_width) + "   " + right).rstrip())
            out.append("")
    return "\n".join(out)


def strata_doc(m) -> dict:
    c = cell(m)
    strata = betti_strata(c.m, c.shape)
    free = [k for k in range(1, len(c.index) + 1) if k not in set(c.hom_params)]
    return {
        "m": list(c.m),
        "dim": c.dim,
        "conjectural": not c.proven or any(s.conjectural for s in strata.values()),
        "Nbar": matrix_strs(constant_term_matrix(c.m, c.shape, with_canonical=True)),
        "strata": [
            {
                "d": d,
                "cut_out": [str(g) for g in s.cut_out],
                "removed": [str(g) for g in s.removed],
                "description": s.describe(c.dim),
            }
            for d, s in strata.items()
        ],
        "homogeneous": {
            "params": [f"c{k}" for k in c.hom_params],
            "dim": c.dim_hom,
            "description": f"V({', '.join(f'c{k}' for k in free)})" if free else f"A^{c.dim}",
        },
    }


def render_strata(doc: dict) -> str:
    lines = [f"m = {doc['m']}   dim {doc['dim']}" + ("   (conjectural)" if doc["conjectural"] else "")]
    lines.append("constant terms:")
    widths = [max(len(row[j]) for row in doc["Nbar"]) for j in range(len(doc["Nbar"][0]))]
    lines += ["  [ " + "  ".join(s.ljust(w) for s, w in zip(row, widths)) + " ]" for row in doc["Nbar"]]
    for s in doc["strata"]:
        lines.append(f"V_{s['d']} = {s['description']}")
    hom = doc["homogeneous"]
    lines.append(f"V_hom = {hom['description']}  ~ A^{hom['dim']}")
    return "\n".join(lines) + "\n"


def check_doc(n, plaus, fib, report=None) -> dict:
    doc = {
        "n": n,
        "plausibility": {
            "ok": plaus.ok,
            "dimension_vector": list(plaus.dimension_vector),
            "expected": list(plaus.expected),
            "offending": [
                {"dim": i, "cells": a, "expected": p, "partitions": [list(m) for m in ms]}
                for i, a, p, ms in plaus.offending
            ],
        },
        "fibration": {
            "ok": fib.ok,
            "differences": [{"h": list(h), "values": list(v)} for h, v in fib.differences.items()],
        },
    }
    ok = plaus.ok and fib.ok
    if report is not None:
        doc["verification"] = {
            "ok": report.verified,
            "field": report.field.characteristic,
            "seed": report.seed,
            "cells": [
                {
                    "m": list(v.m),
                    "trials": v.trials,
                    "passed": v.passed,
                    "lt_failures": [[t, list(found)] for t, found in v.lt_failures],
                    "hf_failures": [[t, list(found)] for t, found in v.hf_failures],
                    "errors": [[str(t), msg] for t, msg in v.errors],
                    "distinct_points": v.distinct_points,
                    "distinct_ok": v.distinct_ok,
                }
                for v in report.verification.values()
            ],
        }
        ok = ok and report.verified
    doc["passed"] = ok
    return doc


def render_check(doc: dict) -> str:
    def flag(ok):
        return "PASS" if ok else "FAIL"

    p, f = doc["plausibility"], doc["fibration"]
    lines = [
        f"n = {doc['n']}",
        f"plausibility  {flag(p['ok'])}  a = {tuple(p['dimension_vector'])}  P(i, n-i) = {tuple(p['expected'])}",
    ]
    for off in p["offending"]:
        lines.append(f"  dim {off['dim']}: {off['cells']} cells, expected {off['expected']}")
    lines.append(f"fibration     {flag(f['ok'])}  {len(f['differences'])} Hilbert functions")
    for row in f["differences"]:
        if len(row["values"]) != 1:
            lines.append(f"  h = {row['h']}: dim - dim_hom takes values {row['values']}")
    if "verification" in doc:
        v = doc["verification"]
        failed = [c for c in v["cells"] if not c["passed"]]
        lines.append(
            f"verification  {flag(v['ok'])}  {len(v['cells']) - len(failed)}/{len(v['cells'])} cells"
            f"  (F_{v['field']}, seed {v['seed']})"
        )
        for c in failed:
            lines.append(f"  m = {c['m']}: lt {c['lt_failures']} hf {c['hf_failures']} errors {c['errors']} distinct {c['distinct_ok']}")
    lines.append(flag(doc["passed"]))
    return "\n".join(lines) + "\n"
