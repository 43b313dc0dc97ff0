"""Monomial ideals ``E = (x^t, x^(t-1) y^m_1, ..., y^m_t)`` and their integer data.

Matrix positions ``(i, j)`` are 1-based throughout the public API, with
``1 <= i <= t + 1`` and ``1 <= j <= t``.
"""
from typing import Sequence

from .combinatorics import Partition


def differences(m: Sequence[int]) -> tuple:
    """``d_i = m_i - m_(i-1)`` with ``m_0 = 0``."""
    m = Partition(m)
    prev = (0,) + tuple(m[:-1])
    return tuple(a - b for a, b in zip(m, prev))


def monomial_generators(m: Sequence[int]) -> list:
    """Exponent pairs ``(t - i, m_i)`` for ``i = 0..t`` (``m_0 = 0``)."""
    m = Partition(m)
    t = m.t
    return [(t, 0)] + [(t - i, m[i - 1]) for i in range(1, t + 1)]


def minimal_generators(m: Sequence[int]) -> list:
    """Drop ``x^(t-i) y^m_i`` when ``d_(i+1) = 0``: then ``x^(t-i-1) y^m_(i+1)`` divides it."""
    d = differences(m)
    gens = monomial_generators(m)
    t = len(d)
    return [g for i, g in enumerate(gens) if i == t or d[i] != 0]


def degree_entry(m: Sequence[int], i: int, j: int) -> int:
    """``u_(i,j) = m_j - m_(i-1) + i - j`` (1-based)."""
    full = (0,) + tuple(m)
    return full[j] - full[i - 1] + i - j


def degree_matrix(m: Sequence[int]) -> tuple:
    """The ``(t+1) x t`` degree matrix as a tuple of rows."""
    m = Partition(m)
    full = (0,) + tuple(m)
    t = m.t
    return tuple(
        tuple(full[j] - full[i - 1] + i - j for j in range(1, t + 1))
        for i in range(1, t + 2)
    )


def is_lex_segment(m: Sequence[int]) -> bool:
    m = Partition(m)
    return all(a < b for a, b in zip(m, m[1:]))


def satisfies_lex_gb_condition(m: Sequence[int]) -> bool:
    """``m_j - j - 1 <= m_i - i`` for all ``j < i``."""
    m = Partition(m)
    best = None  # running max of m_j - j over j < i
    for i, mi in enumerate(m, start=1):
        if best is not None and best - 1 > mi - i:
            return False
        best = mi - i if best is None else max(best, mi - i)
    return True
