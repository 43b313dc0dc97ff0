"""Standard bases in k[[x, y]] for the local degree ordering (Mora's tangent cone algorithm).

The ordering: ``x^a y^b > x^c y^d`` iff ``a + b < c + d``, or the degrees are
equal and ``a > c`` (lex with ``x > y``).  Leading terms are therefore the
lowest-degree terms.

Polynomials enter and leave as :class:`~punctual.polys.Poly` over a ring
``(x, y)``; internally they are plain ``{(a, b): coeff}`` dicts.
"""
from dataclasses import dataclass
from typing import Sequence

from .combinatorics import HilbertFunction, Partition, hilbert_function_of_staircase
from .errors import DegreeBoundError, DimensionError
from .polys import Poly, PolyRing


def local_key(e) -> tuple:
    """Sort key: larger key means larger in the local ordering."""
    return (-(e[0] + e[1]), e[0])


def compare_local(m1, m2) -> int:
    """``1`` if ``m1 > m2``, ``-1`` if ``m1 < m2``, ``0`` if equal."""
    k1, k2 = local_key(m1), local_key(m2)
    return (k1 > k2) - (k1 < k2)


@dataclass(frozen=True)
class LocalTerm:
    exponent: tuple
    coefficient: object


def _lead(terms: dict):
    return max(terms, key=local_key)


def leading_term(f: Poly) -> LocalTerm:
    if f.is_zero():
        raise ValueError("the zero polynomial has no leading term")
    e = _lead(f.terms)
    return LocalTerm(e, f.terms[e])


def _divides(a, b) -> bool:
    return a[0] <= b[0] and a[1] <= b[1]


class _Elem:
    """A polynomial with its cached leading monomial and ecart."""

    __slots__ = ("terms", "lm", "ecart", "deg")

    def __init__(self, terms):
        self.terms = terms
        self.lm = _lead(terms)
        self.deg = max(a + b for a, b in terms)
        self.ecart = self.deg - sum(self.lm)


def _sub_multiple(f: dict, coeff, shift, g: dict, F) -> dict:
    """``f - coeff * x^shift[0] y^shift[1] * g``."""
    out = dict(f)
    sa, sb = shift
    for (a, b), c in g.items():
        e = (a + sa, b + sb)
        v = F.sub(out.get(e, 0), F.mul(coeff, c))
        if v == 0:
            out.pop(e, None)
        else:
            out[e] = v
    return out


def _reduce_step(h: dict, hlm, g: _Elem, F) -> dict:
    coeff = F.div(h[hlm], g.terms[g.lm])
    shift = (hlm[0] - g.lm[0], hlm[1] - g.lm[1])
    return _sub_multiple(h, coeff, shift, g.terms, F)


def _spoly(f: _Elem, g: _Elem, F) -> dict:
    lcm = (max(f.lm[0], g.lm[0]), max(f.lm[1], g.lm[1]))
    left = _sub_multiple({}, F.neg(F.inv(f.terms[f.lm])), (lcm[0] - f.lm[0], lcm[1] - f.lm[1]), f.terms, F)
    return _sub_multiple(left, F.inv(g.terms[g.lm]), (lcm[0] - g.lm[0], lcm[1] - g.lm[1]), g.terms, F)


def _check_bound(terms: dict, bound):
    if bound is not None and terms and max(a + b for a, b in terms) > bound:
        raise DegreeBoundError(f"intermediate degree exceeds the guard {bound}")


def _mora(h: dict, reducers: list, F, bound) -> dict:
    """Weak normal form: ecart-minimal reducer, intermediate results become reducers."""
    T = list(reducers)
    while h:
        hlm = _lead(h)
        best = None
        for g in T:
            if _divides(g.lm, hlm) and (best is None or g.ecart < best.ecart):
                best = g
        if best is None:
            break
        current = _Elem(h)
        if best.ecart > current.ecart:
            T.append(current)
        h = _reduce_step(h, hlm, best, F)
        _check_bound(h, bound)
    return h


def _as_terms(f: Poly, ring: PolyRing) -> dict:
    if f.ring.gens != ("x", "y"):
        raise ValueError(f"expected a polynomial in x, y; got ring {f.ring!r}")
    return dict(f.terms)


def _ring_for(F: Sequence[Poly]) -> PolyRing:
    rings = {f.ring for f in F}
    if len(rings) != 1:
        raise ValueError("generators live in different rings")
    return rings.pop()


def mora_normal_form(f: Poly, G: Sequence[Poly], degree_bound: int = None) -> Poly:
    """Mora's weak normal form of ``f`` with respect to ``G``.

    The result ``r`` satisfies ``u f = sum a_i g_i + r`` for a unit ``u``, and
    either ``r = 0`` or its leading term is divisible by no leading term of ``G``.
    """
    if not G:
        raise ValueError("need at least one reducer")
    ring = _ring_for([f, *G])
    reducers = [_Elem(_as_terms(g, ring)) for g in G if not g.is_zero()]
    return Poly(ring, _mora(_as_terms(f, ring), reducers, ring.field, degree_bound))


def mora_reduces(f: Poly, G: Sequence[Poly], degree_bound: int = None) -> bool:
    return mora_normal_form(f, G, degree_bound).is_zero()


@dataclass(frozen=True)
class StandardBasis:
    polys: tuple
    reduced: bool

    @property
    def leading_monomials(self) -> tuple:
        return tuple(leading_term(f).exponent for f in self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)


def _default_bound(elems):
    degs = sorted((e.deg for e in elems), reverse=True) + [1, 1]
    return 4 * max(degs[0] * degs[1], 1)


def staircase_of(monomials) -> Partition:
    """Partition ``m`` of the monomial ideal generated by ``monomials``."""
    monomials = list(monomials)
    if not any(b == 0 for a, b in monomials) or not any(a == 0 for a, b in monomials):
        raise DimensionError("leading-term ideal has an infinite staircase")
    t = min(a for a, b in monomials if b == 0)
    heights = [min(b for a2, b in monomials if a2 <= a) for a in range(t)]
    return Partition(reversed(heights))


def standard_basis(F: Sequence[Poly], degree_bound: int = None, reduced: bool = True) -> StandardBasis:
    """Standard basis of the ideal generated by ``F`` in the localization at the origin.

    Buchberger loop with Mora's normal form; pairs are handled lowest lcm
    degree first.  The result is interreduced to a minimal basis and, when
    ``reduced``, tail-reduced to the unique reduced standard basis (monic,
    tails supported on standard monomials).  The ideal must be
    zero-dimensional.
    """
    F = [f for f in F if not f.is_zero()]
    if not F:
        raise DimensionError("the zero ideal is not zero-dimensional")
    ring = _ring_for(F)
    K = ring.field
    S = [_Elem(_as_terms(f, ring)) for f in F]
    bound = degree_bound if degree_bound is not None else _default_bound(S)
    pairs = [(i, j) for j in range(len(S)) for i in range(j)]

    def pair_key(p):
        f, g = S[p[0]], S[p[1]]
        lcm = (max(f.lm[0], g.lm[0]), max(f.lm[1], g.lm[1]))
        return (sum(lcm), -lcm[0], p[1], p[0])

    while pairs:
        pairs.sort(key=pair_key)
        i, j = pairs.pop(0)
        h = _mora(_spoly(S[i], S[j], K), S, K, bound)
        if h:
            pairs.extend((k, len(S)) for k in range(len(S)))
            S.append(_Elem(h))

    minimal = []
    for k, f in enumerate(S):
        redundant = any(
            _divides(g.lm, f.lm) and (g.lm != f.lm or l < k)
            for l, g in enumerate(S)
            if l != k
        )
        if not redundant:
            minimal.append(f)
    minimal.sort(key=lambda e: (-e.lm[0], e.lm[1]))
    m = staircase_of([e.lm for e in minimal])
    if not reduced:
        return StandardBasis(tuple(Poly(ring, dict(e.terms)) for e in minimal), False)
    return StandardBasis(tuple(Poly(ring, t) for t in _tail_reduce(minimal, m, K)), True)


def _tail_reduce(minimal, m, K):
    # Every monomial of degree >= top lies in m^top, which is inside the ideal
    # once the staircase is known, so such tail terms may be dropped.
    h = hilbert_function_of_staircase(m)
    top = len(h)
    elems = []
    for e in minimal:
        inv = K.inv(e.terms[e.lm])
        terms = {mono: K.mul(c, inv) for mono, c in e.terms.items() if mono == e.lm or sum(mono) < top}
        elems.append((e.lm, terms))
    leads = [lm for lm, _ in elems]
    out = []
    for lm, terms in elems:
        while True:
            reducible = [
                mono for mono in terms
                if mono != lm and any(_divides(l, mono) for l in leads)
            ]
            if not reducible:
                break
            mono = max(reducible, key=local_key)
            k = next(k for k, l in enumerate(leads) if _divides(l, mono))
            glm, gterms = elems[k]
            shift = (mono[0] - glm[0], mono[1] - glm[1])
            terms = _sub_multiple(terms, terms[mono], shift, gterms, K)
            terms = {mo: c for mo, c in terms.items() if mo == lm or sum(mo) < top}
        out.append(terms)
    return out


def leading_term_ideal(B: StandardBasis) -> Partition:
    return staircase_of(B.leading_monomials)


def hilbert_function_of_quotient(B: StandardBasis) -> HilbertFunction:
    return hilbert_function_of_staircase(leading_term_ideal(B))
