import pytest

from punctual.combinatorics import bounded_partition_count, hilbert_function_of_staircase, partitions
from punctual.decomposition import (
    betti_numbers_punctual,
    cell,
    cellular_decomposition,
    dimension_vector,
    fibration_check,
    group_by_hilbert_function,
    one_dimensional_socle_stratum,
    plausibility_check,
    stratum_betti_numbers,
    verify_cell,
    verify_conjecture,
)
from punctual.errors import FieldError
from punctual.fields import GF, QQ
from punctual.hbmatrix import hom_subcell_dimension, lex_cell_dimension_formula
from punctual.localsb import leading_term_ideal, standard_basis
from punctual.symbolic import maximal_minors
from punctual.staircase import is_lex_segment

from oracles import euler_partition_count


@pytest.mark.parametrize("m, dim, hom, mu", [
    ((2, 4), 4, 3, (2, 3)),
    ((3, 3), 3, None, (2,)),
    ((1, 2, 3), 0, None, (4,)),
])
def test_cell_examples(m, dim, hom, mu):
    c = cell(m)
    assert c.dim == dim
    if hom is not None:
        assert c.dim_hom == hom
    assert c.mu == mu


def test_cell_fields():
    c = cell((1, 1, 4))
    assert c.E == ((3, 0), (1, 1), (0, 4))
    assert c.d == (1, 0, 3)
    assert c.hilb == (1, 2, 2, 1)
    assert c.proven and not cell((1, 1, 2, 2)).proven
    assert len(c.I) == 4 and len(c.M) == 4
    assert cell((2, 4)).proven


def test_decomposition_of_6():
    report = cellular_decomposition(6)
    assert len(report.cells) == 11
    assert len(report.groups) == 4
    assert report.dimension_vector == (1, 1, 2, 3, 3, 1)
    assert report.plausible and report.fibration
    assert report.verified is None


def test_decomposition_of_1_and_7():
    report = cellular_decomposition(1)
    assert [c.m for c in report.cells] == [(1,)] and report.cells[0].dim == 0
    report = cellular_decomposition(7)
    assert len(report.cells) == 15
    assert report.dimension_vector == tuple(bounded_partition_count(i, 7 - i) for i in range(7))


def test_betti_numbers():
    assert betti_numbers_punctual(6) == (1, 1, 2, 3, 3, 1)
    assert betti_numbers_punctual(1) == (1,)
    with pytest.raises(ValueError):
        betti_numbers_punctual(0)


def test_stratum_betti_numbers_of_6():
    strata = stratum_betti_numbers(6)
    assert strata[(1, 2, 2, 1)] == (0, 1, 2, 2, 1)
    assert strata[(1,) * 6] == (0, 0, 0, 0, 1, 1)


def test_plausibility_small():
    r = plausibility_check(2)
    assert r.ok and r.dimension_vector == (1, 1)
    assert plausibility_check(6).ok


def test_fibration_of_6():
    r = fibration_check(6)
    assert r.ok
    assert r.differences[(1, 2, 2, 1)] == (1,)
    assert r.differences[(1, 2, 1, 1, 1)] == (3,)
    assert r.differences[(1,) * 6] == (4,)
    assert fibration_check(1).ok


@pytest.mark.parametrize("n, dims", [(6, (5, 4)), (2, (1, 0)), (10, (9, 8))])
def test_one_dimensional_socle(n, dims):
    assert one_dimensional_socle_stratum(n) == dims


def test_dimension_vector_grows_when_needed():
    assert dimension_vector([0, 3], 2) == (1, 0, 0, 1)


def test_cell_invariants_up_to_14():
    for n in range(1, 15):
        cells = [cell(m) for m in partitions(n)]
        assert len(cells) == euler_partition_count(n)
        top = [c for c in cells if c.dim == n - 1]
        assert [c.m for c in top] == [(n,)]
        for c in cells:
            assert c.dim_hom == hom_subcell_dimension(c.m)
            if is_lex_segment(c.m):
                assert c.dim == lex_cell_dimension_formula(c.hilb)


def test_grouping_order():
    groups = group_by_hilbert_function(cell(m) for m in partitions(6))
    assert list(groups) == [(1, 2, 3), (1, 2, 2, 1), (1, 2, 1, 1, 1), (1,) * 6]
    assert [c.m for c in groups[(1,) * 6]] == [(1,) * 6, (6,)]


def test_checks_up_to_40():
    for n in range(1, 41):
        r = plausibility_check(n)
        assert r.ok, r.offending
        assert sum(r.dimension_vector) == euler_partition_count(n)
        assert r.dimension_vector[n - 1] == 1
    for n in range(1, 21):
        assert fibration_check(n).ok


@pytest.mark.slow
def test_checks_41_to_50():
    for n in range(41, 51):
        assert plausibility_check(n).ok
        assert fibration_check(n).ok


def test_monomial_point_is_in_its_cell():
    for m in partitions(3):
        B = standard_basis(maximal_minors(cell(m).H))
        assert leading_term_ideal(B) == m


def test_verify_six():
    report = verify_conjecture(6, trials=25, field=GF(32003), seed=1)
    assert report.verified
    assert report.seed == 1 and report.field == GF(32003)
    assert all(v.distinct_points == (5 if cell(m).dim else 0) for m, v in report.verification.items())


def test_verification_is_independent_of_workers():
    one = verify_conjecture(4, trials=3, seed=9)
    two = verify_conjecture(4, trials=3, seed=9, workers=2)
    assert one.verification == two.verification


def test_verification_needs_prime_field():
    with pytest.raises(FieldError):
        verify_cell((2, 4), field=QQ)
    with pytest.raises(FieldError):
        verify_conjecture(3, field=QQ)
