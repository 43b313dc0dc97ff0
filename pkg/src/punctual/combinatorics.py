"""Partitions, bounded-partition counts and Hilbert functions of staircases."""
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import AdmissibilityError, EmptyInputError


class Partition(tuple):
    """Nondecreasing tuple of positive parts ``m_1 <= ... <= m_t``.

    Encodes the monomial ideal ``(x^t, x^(t-1) y^m_1, ..., y^m_t)``; the sum
    of the parts is the colength ``n``.
    """

    def __new__(cls, parts: Sequence[int]):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise EmptyInputError("a partition needs at least one part")
        if parts[0] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        if any(a > b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be nondecreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def t(self) -> int:
        return len(self)

    def __repr__(self):
        return f"Partition({list(self)})"


class HilbertFunction(tuple):
    """Admissible Hilbert function ``(h_0, ..., h_s)``, trailing zero dropped.

    Admissible means ``h_i = i + 1`` below the order ``t`` and
    ``t >= h_t >= ... >= h_s >= 1`` afterwards.
    """

    def __new__(cls, values: Sequence[int]):
        values = tuple(int(v) for v in values)
        if not values:
            raise AdmissibilityError("empty Hilbert function")
        t = 0
        while t < len(values) and values[t] == t + 1:
            t += 1
        tail = values[t:]
        if any(v < 1 for v in values):
            raise AdmissibilityError(f"values must be positive: {values}")
        if tail and (tail[0] > t or any(a < b for a, b in zip(tail, tail[1:]))):
            raise AdmissibilityError(f"{values} is not admissible")
        return super().__new__(cls, values)

    @property
    def t(self) -> int:
        """Order of the ideal: the first index where ``h_i < i + 1``."""
        t = 0
        while t < len(self) and self[t] == t + 1:
            t += 1
        return t

    @property
    def s(self) -> int:
        return len(self) - 1

    @property
    def n(self) -> int:
        return sum(self)

    def drops(self):
        """Heights of the decreases ``h_(i-1) - h_i``, including the final drop to 0."""
        padded = tuple(self) + (0,)
        return [a - b for a, b in zip(padded, padded[1:]) if a > b]

    def __repr__(self):
        return f"HilbertFunction({list(self)})"


def _partitions_from(n: int, smallest: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(smallest, n + 1):
        if first == n:
            yield (n,)
        elif 2 * first <= n:
            for rest in _partitions_from(n - first, first):
                yield (first,) + rest


def partitions(n: int) -> list:
    """All partitions of ``n`` as nondecreasing tuples, in lexicographic order."""
    if n < 1:
        raise EmptyInputError(f"partitions of {n} requested; need n >= 1")
    return [Partition(p) for p in _partitions_from(n, 1)]


@lru_cache(maxsize=None)
def bounded_partition_count(n: int, l: int) -> int:
    """Number of partitions of ``n`` into parts of size at most ``l``."""
    if n < 0 or l < 0:
        raise ValueError("n and l must be nonnegative")
    table = [1] + [0] * n
    for part in range(1, min(l, n) + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


def staircase_heights(m: Sequence[int]) -> list:
    """Column heights: ``heights[a]`` is the number of standard monomials ``x^a y^b``."""
    return list(reversed(m))


def hilbert_function_of_staircase(m: Sequence[int]) -> HilbertFunction:
    """Count standard monomials of each total degree under the staircase of ``m``."""
    m = Partition(m)
    heights = staircase_heights(m)
    top = max(a + h - 1 for a, h in enumerate(heights))
    h = [0] * (top + 1)
    for a, height in enumerate(heights):
        for b in range(height):
            h[a + b] += 1
    return HilbertFunction(h)


def max_jump(h: Sequence[int]) -> int:
    """Largest ``|h_i - h_(i-1)|``, counting the final drop to zero."""
    h = HilbertFunction(h)
    padded = tuple(h) + (0,)
    return max(abs(a - b) for a, b in zip(padded, padded[1:]))


def lex_segment_of(h: Sequence[int]) -> Partition:
    """The lex-segment staircase with Hilbert function ``h``.

    In each degree ``j`` the ``h_j`` standard monomials are
    ``y^j, x y^(j-1), ..., x^(h_j - 1) y^(j - h_j + 1)``, so the column of
    ``x^a`` has height ``#{j >= a : h_j > a}``.
    """
    h = HilbertFunction(h)
    t = h.t
    heights = [sum(1 for j in range(a, len(h)) if h[j] > a) for a in range(t)]
    m = Partition(reversed(heights))
    if hilbert_function_of_staircase(m) != h:
        raise AdmissibilityError(f"{tuple(h)} has no lex-segment ideal")
    return m
