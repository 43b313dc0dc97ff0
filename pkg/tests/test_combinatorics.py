import pytest
from hypothesis import given, strategies as st

from punctual.combinatorics import (
    HilbertFunction,
    Partition,
    bounded_partition_count,
    hilbert_function_of_staircase,
    lex_segment_of,
    max_jump,
    partitions,
)
from punctual.errors import AdmissibilityError, EmptyInputError
from punctual.staircase import is_lex_segment

from oracles import brute_bounded_count, brute_hilbert_function, brute_partitions, euler_partition_count


def test_partitions_of_6_are_eleven():
    assert len(partitions(6)) == 11


def test_partitions_small_cases():
    assert partitions(1) == [(1,)]
    assert len(partitions(7)) == 15 == len(brute_partitions(7)) == euler_partition_count(7)


def test_partitions_order_is_lexicographic():
    for n in range(1, 12):
        ps = partitions(n)
        assert ps == sorted(ps)
        assert [tuple(p) for p in ps] == brute_partitions(n)


def test_partitions_rejects_zero():
    with pytest.raises(EmptyInputError):
        partitions(0)


@pytest.mark.parametrize("n, l, expected", [(2, 4, 2), (0, 6, 1), (5, 1, 1)])
def test_bounded_partition_count_examples(n, l, expected):
    assert bounded_partition_count(n, l) == expected == brute_bounded_count(n, l)


def test_partition_counts_up_to_30():
    for n in range(1, 31):
        count = len(partitions(n))
        assert count == euler_partition_count(n)
        assert bounded_partition_count(n, n) == count


@given(st.integers(0, 60), st.integers(1, 60))
def test_bounded_count_recurrence(n, l):
    rhs = bounded_partition_count(n, l - 1) + (bounded_partition_count(n - l, l) if n >= l else 0)
    assert bounded_partition_count(n, l) == rhs


def test_bounded_count_base_case():
    assert bounded_partition_count(0, 0) == 1
    assert all(bounded_partition_count(n, 0) == 0 for n in range(1, 10))


@pytest.mark.parametrize("m, h", [
    ((1, 5, 8, 10), (1, 2, 3, 4, 3, 3, 3, 2, 2, 1)),
    ((2, 3, 5, 7), (1, 2, 3, 4, 4, 2, 1)),
    ((1, 2, 3), (1, 2, 3)),
])
def test_hilbert_function_examples(m, h):
    assert hilbert_function_of_staircase(m) == h


def test_hilbert_functions_admissible_up_to_30():
    for n in range(1, 31):
        for m in partitions(n):
            h = hilbert_function_of_staircase(m)
            assert sum(h) == n
            HilbertFunction(h)  # admissibility enforced by the constructor
            if n <= 12:
                assert tuple(h) == brute_hilbert_function(m)


@pytest.mark.parametrize("h, delta", [
    ((1, 2, 3, 4, 3, 3, 3, 2, 2, 1), 1),
    ((1, 2, 3, 4, 4, 2, 1), 2),
    ((1, 1), 1),
    ((1, 2, 3), 3),
])
def test_max_jump(h, delta):
    padded = list(h) + [0]
    assert max(abs(a - b) for a, b in zip(padded, padded[1:])) == delta
    assert max_jump(h) == delta


@pytest.mark.parametrize("h, m", [
    ((1, 2, 3, 4, 3, 3, 3, 2, 2, 1), (1, 5, 8, 10)),
    ((1, 2, 3, 4, 4, 2, 1), (2, 3, 5, 7)),
    ((1, 1, 1, 1, 1, 1), (6,)),
])
def test_lex_segment_examples(h, m):
    assert lex_segment_of(h) == m


def test_lex_segment_keeps_highest_y_powers():
    for n in range(1, 16):
        for m in partitions(n):
            h = hilbert_function_of_staircase(m)
            lex = lex_segment_of(h)
            assert hilbert_function_of_staircase(lex) == h
            assert is_lex_segment(lex)
            if is_lex_segment(m):
                assert lex == m


@pytest.mark.parametrize("h", [(1, 2, 4), (1, 3), (2,), (1, 2, 0), (1, 1, 2)])
def test_inadmissible_hilbert_functions(h):
    with pytest.raises(AdmissibilityError):
        lex_segment_of(h)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((3, 2))
    with pytest.raises(ValueError):
        Partition((0, 1))
    assert Partition([1, 2]).n == 3 and Partition([1, 2]).t == 2
