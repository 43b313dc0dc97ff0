"""Maximal minors, constant-term matrices, Betti strata and specialization.

Parameterized matrices are lists of rows of :class:`~punctual.polys.Poly` over a
ring ``(x, y, c1, ..., cD)``; constant-term matrices live in the parameter ring
``(c1, ..., cD)``.
"""
import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .combinatorics import Partition, hilbert_function_of_staircase, max_jump
from .errors import AssignmentError, FieldError, StratumRangeError
from .fields import DEFAULT_PRIME, QQ, GF, rank
from .hbmatrix import FULL, ParamShape, homogeneous_mask, param_index, param_names, param_shape
from .polys import Poly, PolyRing
from .staircase import differences, is_lex_segment


def _column_expansion(matrix, ring):
    """Determinants of all ``k x k`` row-subsets of the first ``k`` columns, k = ncols.

    Returns ``{row bitmask: det}`` for bitmasks with exactly ``ncols`` rows set.
    The recurrence is Laplace expansion along the last column added; the sign
    of row ``r`` is the parity of chosen rows below it.
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    layer = {0: ring.one()}
    for k in range(ncols):
        nxt = {}
        for mask, val in layer.items():
            for r in range(nrows):
                if mask >> r & 1:
                    continue
                entry = matrix[r][k]
                if entry.is_zero():
                    continue
                term = val * entry
                if bin(mask >> (r + 1)).count("1") % 2:
                    term = -term
                key = mask | (1 << r)
                nxt[key] = nxt[key] + term if key in nxt else term
        layer = {mask: v for mask, v in nxt.items() if not v.is_zero()}
    return layer


def _ring_of(matrix):
    for row in matrix:
        for e in row:
            if isinstance(e, Poly):
                return e.ring
    raise ValueError("matrix has no polynomial entries")


def maximal_minors(matrix) -> list:
    """Signed maximal minors ``g_0, ..., g_t`` of a ``(t+1) x t`` matrix.

    ``g_i = (-1)^(t-i) det(matrix without row i)`` (0-based rows), so that the
    canonical matrix of ``m`` yields exactly ``x^(t-i) y^(m_i)``.
    """
    t = len(matrix) - 1
    if any(len(row) != t for row in matrix):
        raise ValueError("expected a (t+1) x t matrix")
    ring = _ring_of(matrix)
    layer = _column_expansion(matrix, ring)
    full = (1 << (t + 1)) - 1
    out = []
    for i in range(t + 1):
        g = layer.get(full ^ (1 << i), ring.zero())
        out.append(-g if (t - i) % 2 else g)
    return out


def determinant(matrix, ring: PolyRing = None):
    n = len(matrix)
    if n == 0:
        return ring.one()
    ring = ring or _ring_of(matrix)
    return _column_expansion(matrix, ring).get((1 << n) - 1, ring.zero())


def param_ring(count: int) -> PolyRing:
    return PolyRing(param_names(count), QQ, nlocal=0)


def constant_term_matrix(m: Sequence[int], shape: ParamShape = None, with_canonical: bool = False) -> list:
    """``N̄``: the degree-0 parameter of each entry (or 0).

    With ``with_canonical`` the constant entries of ``H`` itself (the 1's on
    the diagonal where ``d_i = 0``) are included, giving the full reduction of
    ``H + N`` modulo the maximal ideal.  For lex-segment ``m`` both agree.
    """
    m = Partition(m)
    shape = shape or param_shape(m, FULL)
    index = param_index(shape)
    ring = param_ring(len(index))
    t = m.t
    Nbar = [[ring.zero() for _ in range(t)] for _ in range(t + 1)]
    for k, (i, j, e) in enumerate(index, start=1):
        if e == 0:
            Nbar[i - 1][j - 1] = ring.gen(f"c{k}")
    if with_canonical:
        for i, di in enumerate(differences(m)):
            if di == 0:
                Nbar[i][i] = Nbar[i][i] + 1
    return Nbar


def minor_ideal(Nbar, k: int, ring: PolyRing = None) -> list:
    """Nonzero ``k x k`` minors of ``Nbar``, duplicates (up to sign) removed.

    Each minor is signed so that its first printed term is positive.

    ``k = 0`` gives ``[1]``; ``k`` beyond the matrix size gives ``[]`` (the
    zero ideal).  Minors are listed by row subset, then column subset.
    """
    ring = ring or _ring_of(Nbar)
    if k == 0:
        return [ring.one()]
    nrows = len(Nbar)
    ncols = len(Nbar[0]) if nrows else 0
    if k > min(nrows, ncols):
        return []
    rows = [r for r in range(nrows) if any(not e.is_zero() for e in Nbar[r])]
    cols = [c for c in range(ncols) if any(not Nbar[r][c].is_zero() for r in range(nrows))]
    out = []
    seen = set()
    for rs in itertools.combinations(rows, k):
        for cs in itertools.combinations(cols, k):
            sub = [[Nbar[r][c] for c in cs] for r in rs]
            det = determinant(sub, ring)
            if det.is_zero() or det in seen:
                continue
            if det.sorted_terms()[0][1] < 0:
                det = -det
            seen.add(det)
            seen.add(-det)
            out.append(det)
    return out


@dataclass(frozen=True)
class BettiStratum:
    """``V_d = V(cut_out) minus V(removed)`` inside the affine cell."""

    d: int
    cut_out: tuple
    removed: tuple
    conjectural: bool = False

    @property
    def is_affine(self) -> bool:
        """True when nothing is removed (``removed`` generates the unit ideal)."""
        return any(not g.is_zero() and not g.variables() for g in self.removed)

    @property
    def is_empty(self) -> bool:
        return any(not g.is_zero() and not g.variables() for g in self.cut_out)

    def describe(self, dimension: int) -> str:
        def variety(gens):
            return f"V({', '.join(str(g) for g in gens)})" if gens else f"A^{dimension}"

        if self.is_empty:
            return "empty"
        if self.is_affine:
            return variety(self.cut_out)
        return f"{variety(self.cut_out)} \\ {variety(self.removed)}"


def betti_strata(m: Sequence[int], shape: ParamShape = None) -> dict:
    """Betti strata ``{d: BettiStratum}`` for ``d = Δ(h)+1, ..., t+1``.

    ``V_d = V(I_(t+2-d)) \\ V(I_(t+1-d))`` with ``I_k`` the ``k``-minors of the
    constant-term matrix.  Proven for lex-segment ``m``; otherwise the strata
    are flagged conjectural.
    """
    m = Partition(m)
    shape = shape or param_shape(m, FULL)
    Nbar = constant_term_matrix(m, shape, with_canonical=True)
    ring = param_ring(len(param_index(shape)))
    t = m.t
    conjectural = not is_lex_segment(m)
    lowest = max_jump(hilbert_function_of_staircase(m)) + 1
    ideals = {}

    def I(k):
        if k not in ideals:
            ideals[k] = tuple(minor_ideal(Nbar, k, ring))
        return ideals[k]

    return {
        d: BettiStratum(d, I(t + 2 - d), I(t + 1 - d), conjectural)
        for d in range(t + 1, lowest - 1, -1)
    }


def betti_stratum(m: Sequence[int], d: int, shape: ParamShape = None) -> BettiStratum:
    strata = betti_strata(m, shape)
    if d not in strata:
        raise StratumRangeError(f"d = {d} outside {min(strata)}..{max(strata)} for m = {tuple(m)}")
    return strata[d]


def initial_projection(m: Sequence[int], shape: ParamShape, assignment: Sequence) -> tuple:
    """Keep the coordinates of the homogeneous mask, zero the rest."""
    mask = set(homogeneous_mask(m, shape))
    if len(assignment) != len(param_index(shape)):
        raise AssignmentError(f"expected {len(param_index(shape))} coordinates, got {len(assignment)}")
    return tuple(v if k in mask else 0 for k, v in enumerate(assignment, start=1))


def _assignment_values(names, assignment) -> dict:
    if isinstance(assignment, Mapping):
        values = {}
        for key, v in assignment.items():
            values[key if isinstance(key, str) else f"c{key}"] = v
    else:
        assignment = list(assignment)
        if len(assignment) != len(names):
            raise AssignmentError(f"expected {len(names)} parameter values, got {len(assignment)}")
        values = dict(zip(names, assignment))
    missing = [n for n in names if n not in values]
    if missing:
        raise AssignmentError(f"no value for {', '.join(missing)}")
    return {n: values[n] for n in names}


def _params_of(ring: PolyRing) -> tuple:
    return ring.gens[ring.nlocal:]


def specialize(matrix, assignment, field=QQ) -> list:
    """Substitute parameter values and return a matrix over ``field[x, y]``."""
    src = _ring_of(matrix)
    if src.field.characteristic not in (0, field.characteristic):
        raise FieldError(f"cannot map {src.field!r} into {field!r}")
    values = _assignment_values(_params_of(src), assignment)
    target = PolyRing(src.gens[: src.nlocal], field)
    return [[e.substitute(values, target) for e in row] for row in matrix]


def evaluate_constant_matrix(Nbar, assignment, field) -> list:
    src = _ring_of(Nbar)
    values = _assignment_values(src.gens, assignment)
    target = PolyRing((), field, nlocal=0)
    return [[e.substitute(values, target).constant_coefficient() for e in row] for row in Nbar]


def mu_of_point(Nbar, assignment, field=QQ) -> int:
    """Minimal number of generators ``t + 1 - rank(N̄)`` at a parameter point."""
    values = evaluate_constant_matrix(Nbar, assignment, field)
    return len(Nbar) - rank(values, field)


def term_rank(Nbar) -> int:
    """Size of a maximum matching in the support of ``Nbar``.

    For a matrix whose nonzero entries are distinct independent parameters
    this is its generic (= maximal) rank.
    """
    nrows = len(Nbar)
    ncols = len(Nbar[0]) if nrows else 0
    support = np.array([[0 if e.is_zero() else 1 for e in row] for row in Nbar], dtype=np.int8)
    if nrows == 0 or ncols == 0 or not support.any():
        return 0
    matching = maximum_bipartite_matching(csr_matrix(support), perm_type="column")
    return int((matching >= 0).sum())


def mu_values(m: Sequence[int], shape: ParamShape = None, field=None, seed: int = 0, max_patterns: int = 4096) -> tuple:
    """Minimal numbers of generators attained in the cell, ascending.

    Lex-segment cells are exact: the constant-term matrix has independent
    entries, so every rank up to its term rank occurs.  Otherwise every
    zero/nonzero pattern of the constant parameters is tried (random nonzero
    values over ``field``), sampling ``max_patterns`` patterns when there are
    more.
    """
    m = Partition(m)
    shape = shape or param_shape(m, FULL)
    Nbar = constant_term_matrix(m, shape, with_canonical=True)
    t = m.t
    if is_lex_segment(m):
        top = term_rank(Nbar)
        return tuple(range(t + 1 - top, t + 2))
    field = field or GF(DEFAULT_PRIME)
    names = param_names(len(param_index(shape)))
    const = sorted({k for k, (_, _, e) in enumerate(param_index(shape), start=1) if e == 0})
    rng = np.random.default_rng([seed, *m])
    if 2 ** len(const) <= max_patterns:
        patterns = itertools.product((0, 1), repeat=len(const))
    else:
        patterns = (tuple(rng.integers(0, 2, len(const))) for _ in range(max_patterns))
    found = set()
    for pattern in patterns:
        point = dict.fromkeys(names, 0)
        for k, on in zip(const, pattern):
            if on:
                point[f"c{k}"] = int(rng.integers(1, field.characteristic))
        found.add(mu_of_point(Nbar, point, field))
    return tuple(sorted(found))


def boxed_diagonal_point(m: Sequence[int], rank_wanted: int = None, shape: ParamShape = None) -> tuple:
    """A point of a lex-segment cell whose constant-term matrix has the requested rank.

    Puts 1 in the degree-0 coordinates at ``(i, i - Δ(h) - 1)``, the longest
    diagonal that admits nonzero constants, taking the first ``rank_wanted``
    of them (all ``t - Δ(h)`` by default).
    """
    m = Partition(m)
    if not is_lex_segment(m):
        raise ValueError(f"{tuple(m)} is not a lex-segment staircase")
    shape = shape or param_shape(m, FULL)
    index = param_index(shape)
    delta = max_jump(hilbert_function_of_staircase(m))
    t = m.t
    diagonal = [(i, i - delta - 1) for i in range(delta + 2, t + 2)]
    if rank_wanted is None:
        rank_wanted = len(diagonal)
    if not 0 <= rank_wanted <= len(diagonal):
        raise ValueError(f"rank {rank_wanted} outside 0..{len(diagonal)}")
    where = {(i, j): k for k, (i, j, e) in enumerate(index) if e == 0}
    point = [0] * len(index)
    for pos in diagonal[:rank_wanted]:
        point[where[pos]] = 1
    return tuple(point)
