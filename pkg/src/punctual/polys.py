"""Sparse multivariate polynomials with exact coefficients.

A :class:`PolyRing` fixes the variable names and the coefficient field.  The
first ``nlocal`` variables (``x, y`` when present) are the ones the local
ordering acts on; the remaining ones are cell parameters ``c1, c2, ...``.
Terms are printed highest-first under the local ordering, e.g.
``-x + c2*y + c3*y^2``.
"""
import re
from fractions import Fraction

from .fields import QQ

_TERM = re.compile(r"([+-])([^+-]+)")
_NUMBER = re.compile(r"\d+(?:/\d+)?")


class PolyRing:
    def __init__(self, gens, field=QQ, nlocal=None):
        self.gens = tuple(gens)
        self.field = field
        if nlocal is None:
            nlocal = 2 if self.gens[:2] == ("x", "y") else 0
        self.nlocal = nlocal
        self.nvars = len(self.gens)
        self._index = {g: i for i, g in enumerate(self.gens)}
        self._zero_exp = (0,) * self.nvars

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.gens == other.gens
            and self.field == other.field
            and self.nlocal == other.nlocal
        )

    def __hash__(self):
        return hash((self.gens, self.field, self.nlocal))

    def __repr__(self):
        return f"PolyRing({', '.join(self.gens)}; {self.field!r})"

    def index(self, name):
        return self._index[name]

    def zero(self):
        return Poly(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, value):
        c = self.field(value)
        return Poly(self, {self._zero_exp: c} if c != 0 else {})

    def monomial(self, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {len(exps)}")
        c = self.field(coeff)
        return Poly(self, {exps: c} if c != 0 else {})

    def gen(self, name, power=1):
        exps = [0] * self.nvars
        exps[self._index[name]] = power
        return Poly(self, {tuple(exps): self.field.one})

    def sort_key(self, exps):
        k = self.nlocal
        loc, rest = exps[:k], exps[k:]
        return (sum(loc), tuple(-e for e in loc), sum(rest), tuple(-e for e in rest))

    def coerce(self, value):
        if isinstance(value, Poly):
            if value.ring != self:
                raise TypeError(f"polynomial over {value.ring!r} used in {self!r}")
            return value
        return self.constant(value)

    def parse(self, text: str) -> "Poly":
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial string")
        if s[0] not in "+-":
            s = "+" + s
        pieces = _TERM.findall(s)
        if "".join(sign + body for sign, body in pieces) != s:
            raise ValueError(f"cannot parse polynomial {text!r}")
        result = self.zero()
        for sign, body in pieces:
            coeff = Fraction(1)
            exps = [0] * self.nvars
            for factor in body.split("*"):
                if _NUMBER.fullmatch(factor):
                    coeff *= Fraction(factor)
                    continue
                name, _, power = factor.partition("^")
                if name not in self._index:
                    raise ValueError(f"unknown variable {name!r} in {text!r}")
                exps[self._index[name]] += int(power) if power else 1
            if sign == "-":
                coeff = -coeff
            result = result + self.monomial(exps, coeff)
        return result


class Poly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- structure ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def local_degree(self) -> int:
        """Largest total degree in the local variables (``-1`` for zero)."""
        k = self.ring.nlocal
        if not self.terms:
            return -1
        return max(sum(e[:k]) for e in self.terms)

    def constant_coefficient(self):
        return self.terms.get(self.ring._zero_exp, 0)

    def variables(self):
        used = set()
        for e in self.terms:
            used.update(i for i, v in enumerate(e) if v)
        return tuple(self.ring.gens[i] for i in sorted(used))

    def sorted_terms(self):
        key = self.ring.sort_key
        return sorted(self.terms.items(), key=lambda item: key(item[0]))

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = self.ring.coerce(other)
        F = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = F.add(out.get(e, 0), c)
            if v == 0:
                out.pop(e, None)
            else:
                out[e] = v
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Poly(self.ring, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self.ring.coerce(other))

    def __rsub__(self, other):
        return self.ring.coerce(other) - self

    def __mul__(self, other):
        other = self.ring.coerce(other)
        F = self.ring.field
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = F.add(out.get(e, 0), F.mul(c1, c2))
                if v == 0:
                    out.pop(e, None)
                else:
                    out[e] = v
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = self.ring.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self == self.ring.constant(other)
        except Exception:
            return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- evaluation -----------------------------------------------------
    def substitute(self, values: dict, target: PolyRing) -> "Poly":
        """Substitute field values for the named variables and map into ``target``.

        Every variable of ``self.ring`` must either be substituted or exist in
        ``target`` under the same name.
        """
        src = self.ring
        keep = [(i, target.index(g)) for i, g in enumerate(src.gens) if g not in values]
        subst = [(i, values[g]) for i, g in enumerate(src.gens) if g in values]
        F = target.field
        vals = [(i, F(v)) for i, v in subst]
        out = {}
        for e, c in self.terms.items():
            coeff = F(c)
            for i, v in vals:
                if e[i]:
                    coeff = F.mul(coeff, pow(v, e[i]) if F.characteristic == 0 else pow(v, e[i], F.characteristic))
            if coeff == 0:
                continue
            ne = [0] * target.nvars
            for i, j in keep:
                ne[j] = e[i]
            ne = tuple(ne)
            v = F.add(out.get(ne, 0), coeff)
            if v == 0:
                out.pop(ne, None)
            else:
                out[ne] = v
        return Poly(target, out)

    def split_local(self, param_ring: PolyRing) -> dict:
        """Group terms by their local exponent: ``{(a, b): coefficient in param_ring}``."""
        k = self.ring.nlocal
        groups = {}
        for e, c in self.terms.items():
            groups.setdefault(e[:k], {})[e[k:]] = c
        return {loc: Poly(param_ring, terms) for loc, terms in groups.items()}

    # -- printing -------------------------------------------------------
    def _monomial_str(self, e):
        ring = self.ring
        k = ring.nlocal
        order = list(range(k, ring.nvars)) + list(range(k))
        parts = []
        for i in order:
            if e[i] == 1:
                parts.append(ring.gens[i])
            elif e[i] > 1:
                parts.append(f"{ring.gens[i]}^{e[i]}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = self._monomial_str(e)
            negative = c < 0
            mag = -c if negative else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(("-" if negative else "") + body)
            else:
                out.append((" - " if negative else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Poly({self})"
