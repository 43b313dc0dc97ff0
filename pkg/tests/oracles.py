"""Brute-force reference implementations, deliberately independent of the package."""
import itertools
from functools import lru_cache


def brute_partitions(n):
    """Nondecreasing tuples summing to n, by filtering all multisets of parts."""
    out = set()
    for t in range(1, n + 1):
        for combo in itertools.combinations_with_replacement(range(1, n + 1), t):
            if sum(combo) == n:
                out.add(combo)
    return sorted(out)


@lru_cache(maxsize=None)
def euler_partition_count(n):
    """p(n) from Euler's pentagonal number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * euler_partition_count(n - g1)
        if g2 <= n:
            total += sign * euler_partition_count(n - g2)
        k += 1
    return total


def brute_bounded_count(n, l):
    if n == 0:
        return 1
    return sum(1 for p in brute_partitions(n) if max(p) <= l)


def ideal_generators(m):
    t = len(m)
    return [(t, 0)] + [(t - i, m[i - 1]) for i in range(1, t + 1)]


def in_monomial_ideal(mono, gens):
    return any(mono[0] >= a and mono[1] >= b for a, b in gens)


def brute_hilbert_function(m):
    gens = ideal_generators(m)
    bound = len(m) + max(m) + 1
    h = []
    for j in range(bound):
        h.append(sum(1 for a in range(j + 1) if not in_monomial_ideal((a, j - a), gens)))
    while h and h[-1] == 0:
        h.pop()
    return tuple(h)


def brute_minimal_generators(gens):
    return [g for k, g in enumerate(gens)
            if not any(l != k and o[0] <= g[0] and o[1] <= g[1] and (o != g or l < k)
                       for l, o in enumerate(gens))]


def leibniz_det(matrix, one, zero):
    """Determinant by the permutation expansion."""
    n = len(matrix)
    total = zero
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = one
        for i in range(n):
            term = term * matrix[i][perm[i]]
            if term.is_zero():
                break
        total = total - term if inversions % 2 else total + term
    return total


def standard_monomials_by_linear_algebra(polys, p, N):
    """Standard monomials of degree < N of the local ideal generated by ``polys``.

    ``polys`` are ``{(a, b): coeff}`` dicts over F_p.  Assumes ``m^N`` lies in
    the ideal, so the ideal modulo ``m^N`` is spanned by truncated monomial
    multiples of the generators.  Rows are echelonized with columns ordered
    lowest degree first (x before y within a degree); pivot columns are the
    leading monomials.
    """
    columns = [(a, d - a) for d in range(N) for a in range(d, -1, -1)]
    col = {mono: k for k, mono in enumerate(columns)}
    rows = []
    for g in polys:
        for a in range(N):
            for b in range(N - a):
                row = [0] * len(columns)
                for (ga, gb), c in g.items():
                    if ga + a + gb + b < N:
                        row[col[(ga + a, gb + b)]] = c % p
                if any(row):
                    rows.append(row)
    pivots = []
    r = 0
    for k in range(len(columns)):
        piv = next((i for i in range(r, len(rows)) if rows[i][k]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][k], p - 2, p)
        rows[r] = [v * inv % p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][k]:
                f = rows[i][k]
                rows[i] = [(v - f * w) % p for v, w in zip(rows[i], rows[r])]
        pivots.append(columns[k])
        r += 1
    return sorted(set(columns) - set(pivots))


def staircase_monomials(m):
    t = len(m)
    return sorted((a, b) for a in range(t) for b in range(m[t - a - 1]))
