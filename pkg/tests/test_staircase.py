import itertools

import pytest

from punctual.combinatorics import partitions
from punctual.staircase import (
    degree_matrix,
    differences,
    is_lex_segment,
    minimal_generators,
    monomial_generators,
    satisfies_lex_gb_condition,
)

from oracles import brute_minimal_generators, ideal_generators


@pytest.mark.parametrize("m, gens", [
    ((1, 5, 8, 10), [(4, 0), (3, 1), (2, 5), (1, 8), (0, 10)]),
    ((6,), [(1, 0), (0, 6)]),
    ((1, 1, 4), [(3, 0), (2, 1), (1, 1), (0, 4)]),
])
def test_monomial_generators(m, gens):
    assert monomial_generators(m) == gens


def test_minimal_generators_examples():
    assert minimal_generators((1, 1, 4)) == [(3, 0), (1, 1), (0, 4)]
    assert minimal_generators((2, 4)) == [(2, 0), (1, 2), (0, 4)]
    # t = 1: nothing can be redundant
    assert minimal_generators((3,)) == [(1, 0), (0, 3)]


def test_minimal_generators_match_divisibility_scan():
    for n in range(1, 14):
        for m in partitions(n):
            assert minimal_generators(m) == brute_minimal_generators(ideal_generators(m))
            assert len(minimal_generators(m)) == len(m) + 1 - sum(1 for d in differences(m) if d == 0)


def test_degree_matrix_examples():
    assert degree_matrix((1, 5, 8, 10)) == (
        (1, 4, 6, 7), (1, 4, 6, 7), (-2, 1, 3, 4), (-4, -1, 1, 2), (-5, -2, 0, 1))
    assert degree_matrix((2, 3, 5, 7)) == (
        (2, 2, 3, 4), (1, 1, 2, 3), (1, 1, 2, 3), (0, 0, 1, 2), (-1, -1, 0, 1))
    assert degree_matrix((1,)) == ((1,), (1,))


def test_degree_matrix_diagonals_up_to_30():
    for n in range(1, 31):
        for m in partitions(n):
            U, d = degree_matrix(m), differences(m)
            assert sum(d) == m[-1]
            for i in range(len(m)):
                assert U[i][i] == d[i]
                assert U[i + 1][i] == 1


def test_degree_matrix_monotone_for_lex():
    for n in range(1, 25):
        for m in partitions(n):
            if not is_lex_segment(m):
                continue
            U = degree_matrix(m)
            t = len(m)
            for i in range(1, t + 1):
                for j in range(t):
                    neighbours = [U[i - 1][j], U[i][j + 1] if j + 1 < t else None,
                                  U[i - 1][j + 1] if j + 1 < t else None]
                    assert all(U[i][j] <= v for v in neighbours if v is not None)


def test_is_lex_segment():
    assert is_lex_segment((1, 5, 8, 10))
    assert not is_lex_segment((1, 1, 4))
    assert is_lex_segment((2, 4))


def _condition_brute(m):
    return all(m[j - 1] - j - 1 <= m[i - 1] - i
               for i, j in itertools.product(range(1, len(m) + 1), repeat=2) if j < i)


def test_lex_gb_condition_examples():
    assert not satisfies_lex_gb_condition((1, 1, 2, 2))
    assert satisfies_lex_gb_condition((1, 1))
    assert satisfies_lex_gb_condition((1, 5, 8, 10))


def test_lex_gb_condition_matches_brute_force():
    for n in range(1, 20):
        for m in partitions(n):
            assert satisfies_lex_gb_condition(m) == _condition_brute(m)
            if is_lex_segment(m):
                assert satisfies_lex_gb_condition(m)


def test_non_condition_cells_of_6():
    failing = [tuple(m) for m in partitions(6) if not satisfies_lex_gb_condition(m)]
    assert sorted(failing) == sorted([(1, 1, 2, 2), (1, 1, 1, 3), (2, 2, 2), (1, 1, 1, 1, 2), (1,) * 6])
