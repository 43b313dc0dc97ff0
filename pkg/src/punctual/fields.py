"""Exact base fields: the rationals and prime fields F_p.

Elements are plain Python numbers (``int``/``Fraction`` for QQ, ``int`` in
``range(p)`` for F_p) so that polynomial code can stay agnostic of the field.
"""
from fractions import Fraction
from numbers import Rational

from .errors import FieldError


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class RationalField:
    characteristic = 0
    zero = 0
    one = 1

    def __call__(self, value):
        if isinstance(value, bool) or not isinstance(value, (int, Fraction, Rational)):
            if isinstance(value, str):
                return self._normalize(Fraction(value))
            raise FieldError(f"cannot coerce {value!r} into QQ")
        return self._normalize(Fraction(value))

    @staticmethod
    def _normalize(value):
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator
        return value

    def add(self, a, b):
        return self._normalize(a + b)

    def sub(self, a, b):
        return self._normalize(a - b)

    def mul(self, a, b):
        return self._normalize(a * b)

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._normalize(Fraction(1) / a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise FieldError(f"{p!r} is not a prime")
        self.characteristic = p
        self.zero = 0
        self.one = 1

    @property
    def p(self):
        return self.characteristic

    def __call__(self, value):
        p = self.characteristic
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, int):
            return value % p
        if isinstance(value, (Fraction, Rational)):
            num, den = value.numerator, value.denominator
            if den % p == 0:
                raise FieldError(f"denominator of {value} vanishes in F_{p}")
            return num * pow(den, -1, p) % p
        raise FieldError(f"cannot coerce {value!r} into F_{p}")

    def add(self, a, b):
        return (a + b) % self.characteristic

    def sub(self, a, b):
        return (a - b) % self.characteristic

    def mul(self, a, b):
        return a * b % self.characteristic

    def neg(self, a):
        return -a % self.characteristic

    def inv(self, a):
        if a % self.characteristic == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.characteristic)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __repr__(self):
        return f"GF({self.characteristic})"


QQ = RationalField()
GF = PrimeField

DEFAULT_PRIME = 32003


def field_from_spec(spec) -> "RationalField | PrimeField":
    """Parse ``0``/``"QQ"`` as the rationals and any prime ``p`` as F_p."""
    if isinstance(spec, (RationalField, PrimeField)):
        return spec
    if isinstance(spec, str) and spec.strip().upper() in ("QQ", "Q", "0"):
        return QQ
    p = int(spec)
    if p == 0:
        return QQ
    return PrimeField(p)


def rank(matrix, field) -> int:
    """Rank of a matrix of field elements by Gaussian elimination."""
    rows = [[field(v) for v in row] for row in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][c])
        for i in range(r + 1, len(rows)):
            if rows[i][c] != 0:
                f = field.mul(rows[i][c], inv)
                rows[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r
