"""Gröbner-cell decompositions of Hilb^n(k[[x,y]]) and the checks run on them."""
import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .combinatorics import (
    HilbertFunction,
    Partition,
    bounded_partition_count,
    hilbert_function_of_staircase,
    partitions,
)
from .errors import DegreeBoundError, DimensionError, FieldError
from .fields import DEFAULT_PRIME, GF, PrimeField
from .hbmatrix import (
    FULL,
    canonical_matrix,
    cell_dimension,
    full_and_hom_dimensions,
    generic_matrix,
    hom_subcell_dimension,
    homogeneous_mask,
    param_index,
    param_shape,
)
from .localsb import hilbert_function_of_quotient, leading_term_ideal, standard_basis
from .staircase import degree_matrix, differences, minimal_generators, satisfies_lex_gb_condition
from .symbolic import maximal_minors, mu_values, specialize

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cell:
    """One Gröbner cell ``V(E)``, parametrized by ``N -> I_t(H + N)`` over the full shape.

    ``proven`` is set when ``m`` satisfies the lex-Gröbner-basis condition, for
    which the parametrization is known to be bijective; the rest rely on the
    conjectural shape.
    """

    m: Partition
    E: tuple
    d: tuple
    U: tuple
    hilb: HilbertFunction
    shape: object
    index: tuple
    dim: int
    dim_hom: int
    proven: bool

    @property
    def N(self):
        return self.shape, self.index

    @cached_property
    def H(self):
        return canonical_matrix(self.m)

    @cached_property
    def _generic(self):
        return generic_matrix(self.m, self.shape)[0]

    @property
    def M(self):
        return self._generic

    @cached_property
    def I(self):
        return tuple(maximal_minors(self._generic))

    @cached_property
    def mu(self) -> tuple:
        return mu_values(self.m, self.shape)

    @cached_property
    def hom_params(self) -> tuple:
        return homogeneous_mask(self.m, self.shape)


def cell(m: Sequence[int]) -> Cell:
    m = Partition(m)
    shape = param_shape(m, FULL)
    return Cell(
        m=m,
        E=tuple(minimal_generators(m)),
        d=differences(m),
        U=degree_matrix(m),
        hilb=hilbert_function_of_staircase(m),
        shape=shape,
        index=param_index(shape),
        dim=cell_dimension(shape),
        dim_hom=hom_subcell_dimension(m),
        proven=satisfies_lex_gb_condition(m),
    )


def dimension_vector(dims, n: int) -> tuple:
    """``a_i`` = number of ``dims`` equal to ``i``; length ``n``, longer if some dimension needs it."""
    dims = list(dims)
    a = [0] * max([n, *(d + 1 for d in dims)])
    for dim in dims:
        a[dim] += 1
    return tuple(a)


def betti_numbers_punctual(n: int) -> tuple:
    """Even Betti numbers ``b_(2i) = P(i, n - i)`` for ``i = 0..n-1``; odd ones vanish."""
    if n < 1:
        raise ValueError("n must be positive")
    return tuple(bounded_partition_count(i, n - i) for i in range(n))


def group_by_hilbert_function(cells) -> dict:
    """Cells grouped by Hilbert function: groups in decreasing lex order of ``h``,
    cells inside a group by dimension, then partition."""
    groups = defaultdict(list)
    for c in cells:
        groups[c.hilb].append(c)
    return {
        h: tuple(sorted(groups[h], key=lambda c: (c.dim, tuple(c.m))))
        for h in sorted(groups, key=tuple, reverse=True)
    }


def cells_by_dimension(n: int) -> dict:
    """``{i: cells of dimension i}`` for all cells of ``Hilb^n``."""
    out = defaultdict(list)
    for m in partitions(n):
        c = cell(m)
        out[c.dim].append(c)
    return {i: tuple(out[i]) for i in sorted(out)}


@dataclass
class PlausibilityResult:
    n: int
    ok: bool
    dimension_vector: tuple
    expected: tuple
    offending: list = field(default_factory=list)  # (i, a_i, P(i, n-i), partitions of dim i)


@dataclass
class FibrationResult:
    n: int
    ok: bool
    differences: dict  # h -> sorted tuple of distinct dim - dim_hom values


@dataclass
class CellVerification:
    m: Partition
    trials: int
    lt_failures: list = field(default_factory=list)  # (trial, found partition)
    hf_failures: list = field(default_factory=list)
    errors: list = field(default_factory=list)  # (trial, message)
    distinct_points: int = 0
    distinct_ok: bool = True

    @property
    def passed(self) -> bool:
        return not (self.lt_failures or self.hf_failures or self.errors) and self.distinct_ok


@dataclass
class DecompositionReport:
    n: int
    cells: tuple
    groups: dict
    dimension_vector: tuple
    betti_numbers: tuple
    plausible: bool
    fibration: bool
    verification: dict = None
    field: object = None
    seed: int = None

    @property
    def verified(self):
        if self.verification is None:
            return None
        return all(v.passed for v in self.verification.values())


def plausibility_check(n: int) -> PlausibilityResult:
    """Compare the number of cells of each dimension with ``P(i, n - i)``."""
    by_dim = defaultdict(list)
    for m in partitions(n):
        by_dim[full_and_hom_dimensions(m)[0]].append(m)
    a = dimension_vector([d for d, ms in by_dim.items() for _ in ms], n)
    expected = betti_numbers_punctual(n)
    offending = [
        (i, a[i], expected[i], tuple(by_dim.get(i, ())))
        for i in range(n)
        if a[i] != expected[i]
    ]
    return PlausibilityResult(n, not offending, a, expected, offending)


def fibration_check(n: int) -> FibrationResult:
    """Within each Hilbert-function stratum, ``dim - dim_hom`` must be constant."""
    diffs = defaultdict(set)
    for m in partitions(n):
        dim, hom = full_and_hom_dimensions(m)
        diffs[hilbert_function_of_staircase(m)].add(dim - hom)
    table = {h: tuple(sorted(v)) for h, v in sorted(diffs.items(), key=lambda kv: tuple(kv[0]), reverse=True)}
    return FibrationResult(n, all(len(v) == 1 for v in table.values()), table)


def stratum_betti_numbers(n: int) -> dict:
    """``{h: (b_0, b_2, b_4, ...)}`` counting cells of each dimension per stratum."""
    out = {}
    for h, cells in group_by_hilbert_function(cell(m) for m in partitions(n)).items():
        out[h] = dimension_vector([c.dim for c in cells], max(c.dim for c in cells) + 1)
    return out


def one_dimensional_socle_stratum(n: int) -> tuple:
    """Dimensions of the cells of ``(x, y^n)`` and ``(x^n, y)``, the two cells with ``h = (1, ..., 1)``."""
    if n < 2:
        raise ValueError("need n >= 2")
    return full_and_hom_dimensions((n,))[0], full_and_hom_dimensions((1,) * n)[0]


def cellular_decomposition(n: int) -> DecompositionReport:
    cells = tuple(cell(m) for m in partitions(n))
    a = dimension_vector([c.dim for c in cells], n)
    betti = betti_numbers_punctual(n)
    return DecompositionReport(
        n=n,
        cells=cells,
        groups=group_by_hilbert_function(cells),
        dimension_vector=a,
        betti_numbers=betti,
        plausible=a == betti,
        fibration=fibration_check(n).ok,
    )


def random_point(rng, count: int, p: int) -> tuple:
    """Each coordinate is 0 with probability 1/2, else uniform on ``F_p \\ {0}``."""
    return tuple(int(rng.integers(1, p)) if rng.random() < 0.5 else 0 for _ in range(count))


def _trial_rng(seed: int, tag: int, trial: int, m) -> np.random.Generator:
    return np.random.default_rng([seed, tag, trial, *m])


def verify_cell(m: Sequence[int], trials: int = 25, field=None, seed: int = 1, distinct_points: int = 5) -> CellVerification:
    """Check that random points of the cell give ideals with ``Lt = E`` and ``HF = h``,
    and that distinct points give distinct reduced standard bases."""
    field = field or GF(DEFAULT_PRIME)
    if not isinstance(field, PrimeField):
        raise FieldError("verification runs over a prime field")
    c = cell(m)
    p = field.characteristic
    bound = 4 * c.m.n
    M = c.M
    D = len(c.index)
    result = CellVerification(c.m, trials)

    def basis_at(point):
        return standard_basis(maximal_minors(specialize(M, point, field)), degree_bound=bound)

    for trial in range(trials):
        point = random_point(_trial_rng(seed, 0, trial, c.m), D, p)
        try:
            B = basis_at(point)
        except (DegreeBoundError, DimensionError) as exc:
            result.errors.append((trial, str(exc)))
            log.warning("cell %s trial %d (seed %d): %s", tuple(c.m), trial, seed, exc)
            continue
        found = leading_term_ideal(B)
        if found != c.m:
            result.lt_failures.append((trial, found))
        if hilbert_function_of_quotient(B) != c.hilb:
            result.hf_failures.append((trial, hilbert_function_of_quotient(B)))

    if D > 0 and distinct_points > 1:
        points = []
        attempt = 0
        while len(points) < distinct_points:
            point = random_point(_trial_rng(seed, 1, attempt, c.m), D, p)
            attempt += 1
            if point not in points:
                points.append(point)
        bases = []
        for point in points:
            try:
                bases.append(basis_at(point).polys)
            except (DegreeBoundError, DimensionError) as exc:
                result.errors.append((f"distinct-{len(bases)}", str(exc)))
        result.distinct_points = len(points)
        result.distinct_ok = len(set(bases)) == len(bases) == len(points)
    return result


def _verify_args(args):
    return verify_cell(*args)


def verify_conjecture(n: int, trials: int = 25, field=None, seed: int = 1, distinct_points: int = 5, workers: int = 1) -> DecompositionReport:
    """Decomposition of ``Hilb^n`` with per-cell standard-basis verification.

    Seeds are derived per cell and trial, so results do not depend on
    ``workers``.
    """
    field = field or GF(DEFAULT_PRIME)
    if not isinstance(field, PrimeField):
        raise FieldError("verification runs over a prime field")
    report = cellular_decomposition(n)
    jobs = [(c.m, trials, field, seed, distinct_points) for c in report.cells]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_verify_args, jobs))
    else:
        results = [_verify_args(job) for job in jobs]
    report.verification = {r.m: r for r in results}
    report.field = field
    report.seed = seed
    return report
