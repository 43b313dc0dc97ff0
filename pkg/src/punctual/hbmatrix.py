"""Canonical Hilbert-Burch matrices and the parameter shapes of their deformations.

A deformation ``N`` of the canonical matrix ``H`` has entries in ``k[y]``.  Its
shape records, for each position, the window ``[lo, hi]`` of admissible
y-degrees.  Two kinds exist:

``lower``
    strictly lower-triangular deformations, proven to fill the whole cell
    for lex-segment ideals;
``full``
    additionally allows entries on and above the diagonal with order
    ``> u_(i,j)`` and degree ``< d_i`` (the conjectural general shape).
"""
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .combinatorics import HilbertFunction, Partition, hilbert_function_of_staircase
from .fields import QQ
from .polys import PolyRing
from .staircase import degree_matrix, differences

LOWER = "lower"
FULL = "full"
EMPTY = (0, -1)


@dataclass(frozen=True)
class ParamShape:
    m: Partition
    kind: str
    windows: tuple  # (t+1) rows of t pairs (lo, hi); empty windows are EMPTY

    @property
    def t(self):
        return self.m.t

    def window(self, i: int, j: int) -> tuple:
        """Window of entry ``(i, j)``, 1-based."""
        return self.windows[i - 1][j - 1]

    def degrees(self, i: int, j: int) -> range:
        lo, hi = self.window(i, j)
        return range(lo, hi + 1)


def _window_rows(m, kind):
    d = differences(m)
    U = degree_matrix(m)
    t = len(d)
    rows = []
    for i in range(1, t + 2):
        row = []
        for j in range(1, t + 1):
            u = U[i - 1][j - 1]
            if i > j:
                row.append((max(u, 0), d[j - 1] - 1))
            elif kind == FULL:
                row.append((max(u + 1, 0), d[i - 1] - 1))
            else:
                row.append(EMPTY)
        rows.append(tuple(w if w[0] <= w[1] else EMPTY for w in row))
    return tuple(rows)


def param_shape(m: Sequence[int], kind: str = FULL) -> ParamShape:
    if kind not in (LOWER, FULL):
        raise ValueError(f"unknown shape kind {kind!r}")
    m = Partition(m)
    return ParamShape(m, kind, _window_rows(m, kind))


def cell_dimension(shape: ParamShape) -> int:
    return sum(max(0, hi - lo + 1) for row in shape.windows for lo, hi in row)


def param_index(shape: ParamShape) -> tuple:
    """``(i, j, degree)`` for ``c_1, c_2, ...``: row-major, then by degree."""
    out = []
    for i, row in enumerate(shape.windows, start=1):
        for j, (lo, hi) in enumerate(row, start=1):
            out.extend((i, j, e) for e in range(lo, hi + 1))
    return tuple(out)


def param_names(count: int) -> tuple:
    return tuple(f"c{k}" for k in range(1, count + 1))


def hom_subcell_dimension(m: Sequence[int]) -> int:
    """``#{(i, j) : i > j, 0 <= u_(i,j) < d_j}``."""
    d = differences(m)
    U = degree_matrix(m)
    return sum(
        1
        for i, row in enumerate(U, start=1)
        for j, u in enumerate(row, start=1)
        if i > j and 0 <= u < d[j - 1]
    )


def homogeneous_mask(m: Sequence[int], shape: ParamShape) -> tuple:
    """1-based numbers ``k`` of the parameters ``c_k`` sitting in degree ``u_(i,j)`` below the diagonal."""
    U = degree_matrix(m)
    return tuple(
        k
        for k, (i, j, e) in enumerate(param_index(shape), start=1)
        if i > j and e == U[i - 1][j - 1]
    )


def lex_cell_dimension_formula(h: Sequence[int]) -> int:
    """``n - t - sum_l n_l * C(l, 2)`` where ``n_l`` counts drops of height ``l``."""
    h = HilbertFunction(h)
    return h.n - h.t - sum(comb(l, 2) for l in h.drops() if l >= 2)


def hom_dimension_formula_lex(h: Sequence[int]) -> int:
    """``t + sum_(i=t-1..s) (h_(i-1) - h_i)(h_i - h_(i+1))`` with ``h_(-1) = h_(s+1) = 0``."""
    h = HilbertFunction(h)
    t, s = h.t, h.s

    def val(i):
        return h[i] if 0 <= i <= s else 0

    return t + sum((val(i - 1) - val(i)) * (val(i) - val(i + 1)) for i in range(t - 1, s + 1))


def full_and_hom_dimensions(m: Sequence[int]) -> tuple:
    """``(dim of the full shape, dim of the homogeneous sub-cell)`` without building objects.

    This is the hot path of the counting checks; it must agree with
    :func:`cell_dimension` and :func:`hom_subcell_dimension`.
    """
    full = (0,) + tuple(m)
    t = len(m)
    dim = hom = 0
    for i in range(1, t + 2):
        mi1 = full[i - 1]
        for j in range(1, t + 1):
            u = full[j] - mi1 + i - j
            if i > j:
                dj = full[j] - full[j - 1]
                lo = u if u > 0 else 0
                if dj > lo:
                    dim += dj - lo
                    if u >= 0:
                        hom += 1
            else:
                di = full[i] - mi1
                lo = u + 1 if u >= 0 else 0
                if di > lo:
                    dim += di - lo
    return dim, hom


def canonical_matrix(m: Sequence[int], ring: PolyRing = None) -> list:
    """``H``: ``y^(d_i)`` on the diagonal, ``-x`` below it, zero elsewhere."""
    m = Partition(m)
    ring = ring or PolyRing(("x", "y"), QQ)
    d = differences(m)
    t = m.t
    H = [[ring.zero() for _ in range(t)] for _ in range(t + 1)]
    for i in range(t):
        H[i][i] = ring.gen("y", d[i]) if d[i] else ring.one()
        H[i + 1][i] = -ring.gen("x")
    return H


def generic_matrix(m: Sequence[int], shape: ParamShape = None) -> tuple:
    """``(H + N, index)`` with ``N_(i,j) = sum_e c_k y^e`` over the shape windows."""
    m = Partition(m)
    shape = shape or param_shape(m, FULL)
    index = param_index(shape)
    ring = PolyRing(("x", "y") + param_names(len(index)), QQ)
    M = canonical_matrix(m, ring)
    for k, (i, j, e) in enumerate(index, start=1):
        M[i - 1][j - 1] = M[i - 1][j - 1] + ring.gen(f"c{k}") * ring.gen("y", e)
    return M, index


def hilbert_function(m: Sequence[int]) -> HilbertFunction:
    return hilbert_function_of_staircase(m)
