"""Exact arithmetic in the cyclotomic field Q(zeta_48).

Every root-of-unity phase occurring in the modular transformation matrices
lives in Q(zeta_48), as does sqrt(2) = zeta^6 + zeta^-6, so this single
field suffices for the whole package.  An element is stored as an integer
coordinate vector over the power basis 1, z, ..., z^15 (z = exp(2 pi i/48))
together with a common positive denominator, reduced modulo
Phi_48(x) = x^16 - x^8 + 1 and normalized with gcd(content, den) = 1.
The representation is canonical, so equality is coordinate equality and
elements can be hashed (matrix-group closure relies on this).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

DEGREE = 16  # degree of Phi_48


def _reduce(vec):
    """Reduce a coefficient list in place modulo x^16 = x^8 - 1."""
    for p in range(len(vec) - 1, DEGREE - 1, -1):
        cp = vec[p]
        if cp:
            vec[p] = 0
            vec[p - 8] += cp
            vec[p - 16] -= cp
    return vec[:DEGREE]


class Cyclo:
    """Element of Q(zeta_48) in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        # num: iterable of ints or Fractions, den: int != 0.
        num = list(num)
        if any(isinstance(x, Fraction) for x in num):
            common = 1
            for x in num:
                if isinstance(x, Fraction):
                    common = common * x.denominator // gcd(common, x.denominator)
            num = [int(x * common) for x in num]
            den = den * common
        if len(num) > DEGREE:
            num = _reduce(num)
        num += [0] * (DEGREE - len(num))
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            num = [-x for x in num]
        g = den
        for x in num:
            g = gcd(g, x)
            if g == 1:
                break
        if g > 1:
            den //= g
            num = [x // g for x in num]
        self.num = tuple(num)
        self.den = den

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(r) -> "Cyclo":
        r = Fraction(r)
        return Cyclo([r.numerator] + [0] * 15, r.denominator)

    @staticmethod
    def coerce(x) -> "Cyclo":
        if isinstance(x, Cyclo):
            return x
        return Cyclo.from_rational(x)

    # -- predicates / conversions ------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational element: %r" % (self,))
        return Fraction(self.num[0], self.den)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Cyclo):
            if isinstance(other, (int, Fraction)):
                other = Cyclo.from_rational(other)
            else:
                return NotImplemented
        a, b = self, other
        num = [x * b.den + y * a.den for x, y in zip(a.num, b.num)]
        return Cyclo(num, a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo([-x for x in self.num], self.den)

    def __sub__(self, other):
        if not isinstance(other, (Cyclo, int, Fraction)):
            return NotImplemented
        return self + (-Cyclo.coerce(other))

    def __rsub__(self, other):
        return Cyclo.coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Cyclo):
            if isinstance(other, int):
                if other == 0:
                    return _ZERO
                return Cyclo([x * other for x in self.num], self.den)
            if isinstance(other, Fraction):
                return Cyclo([x * other.numerator for x in self.num],
                             self.den * other.denominator)
            return NotImplemented
        out = [0] * 31
        anz = [(i, x) for i, x in enumerate(self.num) if x]
        bnz = [(j, y) for j, y in enumerate(other.num) if y]
        for i, x in anz:
            for j, y in bnz:
                out[i + j] += x * y
        return Cyclo(_reduce(out), self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "Cyclo":
        """Multiplicative inverse via the extended Euclidean algorithm
        against Phi_48."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_48)")
        if self.is_rational():
            return Cyclo.from_rational(1 / self.rational())
        # polynomials as Fraction lists, low degree first
        a = [Fraction(x, self.den) for x in self.num]
        phi = [Fraction(0)] * 17
        phi[0], phi[8], phi[16] = Fraction(1), Fraction(-1), Fraction(1)
        r0, r1 = phi, _ptrim(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while _pdeg(r1) > 0:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        if _pdeg(r1) < 0:
            raise ZeroDivisionError("element not invertible mod Phi_48")
        c = r1[0]
        return Cyclo([x / c for x in s1])

    def __truediv__(self, other):
        return self * Cyclo.coerce(other).inv()

    def __rtruediv__(self, other):
        return Cyclo.coerce(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        r = _ONE
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational() == other
        if not isinstance(other, Cyclo):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.is_rational():
            return str(self.rational())
        parts = []
        for i, x in enumerate(self.num):
            if x:
                coeff = Fraction(x, self.den)
                parts.append(("%s" % coeff) if i == 0 else "%s*z^%d" % (coeff, i))
        return "(" + " + ".join(parts) + ")"

    def complex_embedding(self) -> complex:
        """Debug-only numeric embedding with z = exp(2 pi i/48)."""
        import cmath
        z = cmath.exp(2j * cmath.pi / 48)
        return sum(x * z ** i for i, x in enumerate(self.num)) / self.den


# -- polynomial helpers for the inverse (Fraction lists, low degree first) --

def _ptrim(p):
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _pdeg(p):
    p = _ptrim(list(p))
    return len(p) - 1 if p else -1


def _psub(a, b):
    n = max(len(a), len(b))
    return _ptrim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
                   for i in range(n)])


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _ptrim(out)


def _pdivmod(a, b):
    a = list(a)
    b = _ptrim(list(b))
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv_lead
        if c:
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return _ptrim(q), _ptrim(a)


def zeta_pow(k: int) -> Cyclo:
    """The root of unity zeta_48^k in canonical form."""
    k %= 48
    vec = [0] * (k + 1)
    vec[k] = 1
    return Cyclo(vec)


def sqrt2() -> Cyclo:
    """sqrt(2) = zeta^6 + zeta^-6."""
    return zeta_pow(6) + zeta_pow(-6)


_ZERO = Cyclo([0])
_ONE = Cyclo([1])


def cyc_zero() -> Cyclo:
    return _ZERO


def cyc_one() -> Cyclo:
    return _ONE
