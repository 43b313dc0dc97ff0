"""Command-line entry point: ``punctual {cells,cell,strata,check}``.

Exit codes: 0 success, 1 a check failed, 2 usage error.
"""
import argparse
import logging
import sys

from . import report
from .combinatorics import Partition, partitions
from .decomposition import (
    cell,
    cellular_decomposition,
    fibration_check,
    plausibility_check,
    verify_conjecture,
)
from .errors import FieldError
from .fields import DEFAULT_PRIME, PrimeField

log = logging.getLogger("punctual")


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def partition_arg(text):
    try:
        return Partition(int(p) for p in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{text!r} is not a partition: {exc}")


def prime_arg(text):
    try:
        return PrimeField(int(text))
    except (ValueError, FieldError):
        raise argparse.ArgumentTypeError(f"--field must be a prime, got {text!r}")


def seed_arg(text):
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="punctual",
        description="Gröbner-cell decompositions of the punctual Hilbert scheme Hilb^n(k[[x,y]]).",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cells", help="all cells of Hilb^n")
    p.add_argument("n", type=positive_int)
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--group-by-h", action="store_true", help="group by Hilbert function instead of dimension")

    p = sub.add_parser("cell", help="a single cell, m given as comma-separated parts")
    p.add_argument("m", type=partition_arg)
    p.add_argument("--format", choices=("json", "table"), default="table")

    p = sub.add_parser("strata", help="Betti strata and homogeneous sub-cell of a cell")
    p.add_argument("m", type=partition_arg)
    p.add_argument("--format", choices=("json", "table"), default="table")

    p = sub.add_parser("check", help="dimension-vector and fibration checks, optionally standard-basis verification")
    p.add_argument("n", type=positive_int)
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--trials", type=positive_int, default=25)
    p.add_argument("--field", type=prime_arg, default=PrimeField(DEFAULT_PRIME))
    p.add_argument("--seed", type=seed_arg, default=1)
    p.add_argument("--workers", type=positive_int, default=1)
    return parser


def _cells(args):
    dec = cellular_decomposition(args.n)
    if args.group_by_h:
        groups, header = dec.groups, lambda h: f"h = {list(h)}"
    else:
        by_dim = {}
        for c in dec.cells:
            by_dim.setdefault(c.dim, []).append(c)
        groups = {i: tuple(by_dim[i]) for i in sorted(by_dim)}
        header = lambda i: f"dim {i}"
    if args.format == "json":
        doc = {
            "n": args.n,
            "group_by": "h" if args.group_by_h else "dim",
            "groups": [
                {"key": list(key) if args.group_by_h else key, "cells": [report.cell_to_dict(c) for c in cells]}
                for key, cells in groups.items()
            ],
            "dimension_vector": list(dec.dimension_vector),
        }
        sys.stdout.write(report.dumps(doc))
    else:
        sys.stdout.write(report.render_cells(groups, header))
        sys.stdout.write(f"dimension vector: {tuple(dec.dimension_vector)}\n")
    return 0


def _cell(args):
    c = cell(args.m)
    if not c.proven:
        log.warning("m = %s is outside the proven class; the parametrization is conjectural", list(c.m))
    if args.format == "json":
        sys.stdout.write(report.dumps(report.cell_to_dict(c)))
        return 0
    lines = [
        f"m = {list(c.m)}",
        f"E = ({', '.join(report.monomial_str(e) for e in c.E)})",
        f"h = {list(c.hilb)}",
        f"d = {list(c.d)}",
        "U =",
        *("  [ " + "  ".join(f"{u:>3}" for u in row) + " ]" for row in c.U),
        "H + N =",
        *("  " + line for line in report.render_matrix(c.M)),
        "generators:",
        *(f"  f{i} = {g}" for i, g in enumerate(c.I)),
        f"dim = {c.dim}   dim_hom = {c.dim_hom}   mu = {list(c.mu)}   proven = {c.proven}",
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _strata(args):
    doc = report.strata_doc(args.m)
    if doc["conjectural"]:
        log.warning("m = %s is not lex-segment; strata are conjectural", list(args.m))
    if args.format == "json":
        sys.stdout.write(report.dumps(doc))
    else:
        sys.stdout.write(report.render_strata(doc))
    return 0


def _check(args):
    plaus = plausibility_check(args.n)
    fib = fibration_check(args.n)
    rep = None
    if args.verify:
        rep = verify_conjecture(args.n, args.trials, args.field, args.seed, workers=args.workers)
    doc = report.check_doc(args.n, plaus, fib, rep)
    if args.format == "json":
        sys.stdout.write(report.dumps(doc))
    else:
        sys.stdout.write(report.render_check(doc))
    return 0 if doc["passed"] else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    handlers = {"cells": _cells, "cell": _cell, "strata": _strata, "check": _check}
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
