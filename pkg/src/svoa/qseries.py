"""Truncated q-series on the 1/48 exponent grid, plus the catalog of
standard modular expansions.

A series is a sparse map index -> coefficient where index n stands for
q^(n/48).  The grid 1/48 is the finest needed anywhere: a character of
rank c in (1/2)Z starts at q^(-c/24) in (1/48)Z, and the 1/16-sector
exponents land on it as well.  Coefficients are integers, Fractions, or
Cyclo elements (twisted series); rationals with denominator 1 are stored
as plain ints so that the hot convolution loops run on machine integers.

Truncation semantics: `trunc` is the exclusive upper index bound to which
the coefficients are trusted.  Arithmetic propagates the tightest valid
bound (``min`` for +/-, the lead-shifted ``min`` for products).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .cyclo import Cyclo, zeta_pow

GRID = 48
DEFAULT_TRUNC = 10 * GRID  # q^10


class GridError(ValueError):
    """Raised when an operation would leave the 1/48 exponent grid."""


def _norm_coeff(c):
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return c
    if isinstance(c, Cyclo):
        if c.is_rational():
            return _norm_coeff(c.rational())
        return c
    return c


def _coeff_div(a, b):
    """Exact division of coefficients (never integer floor division)."""
    if isinstance(a, Cyclo) or isinstance(b, Cyclo):
        return _norm_coeff(Cyclo.coerce(a) / Cyclo.coerce(b))
    return _norm_coeff(Fraction(a) / Fraction(b))


class QSeries:
    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs, trunc):
        self.trunc = trunc
        self.coeffs = {}
        for n, c in coeffs.items():
            if n >= trunc:
                continue
            c = _norm_coeff(c)
            if c == 0 or (isinstance(c, Cyclo) and c.is_zero()):
                continue
            self.coeffs[n] = c

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(trunc=DEFAULT_TRUNC):
        return QSeries({}, trunc)

    @staticmethod
    def one(trunc=DEFAULT_TRUNC):
        return QSeries({0: 1}, trunc)

    @staticmethod
    def monomial(index, coeff=1, trunc=DEFAULT_TRUNC):
        return QSeries({index: coeff}, trunc)

    # -- basic queries --------------------------------------------------------

    @property
    def lead(self):
        """Smallest index with nonzero coefficient (None for the zero series)."""
        return min(self.coeffs) if self.coeffs else None

    @property
    def lead_coeff(self):
        return self.coeffs[min(self.coeffs)] if self.coeffs else 0

    def coeff(self, index):
        return self.coeffs.get(index, 0)

    def coeff_q(self, exponent):
        """Coefficient of q^exponent for a rational exponent."""
        e = Fraction(exponent) * GRID
        if e.denominator != 1:
            return 0
        return self.coeffs.get(int(e), 0)

    def is_zero(self):
        return not self.coeffs

    def is_rational_series(self):
        return all(not isinstance(c, Cyclo) for c in self.coeffs.values())

    def support(self):
        return sorted(self.coeffs)

    # -- ring operations -------------------------------------------------------

    def _lead_or_trunc(self):
        return self.lead if self.coeffs else self.trunc

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            other = QSeries({0: other}, self.trunc)
        t = min(self.trunc, other.trunc)
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            out[n] = out.get(n, 0) + c
        return QSeries(out, t)

    __radd__ = __add__

    def __neg__(self):
        return QSeries({n: -c for n, c in self.coeffs.items()}, self.trunc)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            other = QSeries({0: other}, self.trunc)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s):
        if s == 0:
            return QSeries({}, self.trunc)
        return QSeries({n: c * s for n, c in self.coeffs.items()}, self.trunc)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            return self.scale(other)
        t = min(self.trunc + other._lead_or_trunc(),
                other.trunc + self._lead_or_trunc())
        out = {}
        a = self.coeffs
        b = other.coeffs
        if len(a) > len(b):
            a, b = b, a
        bitems = sorted(b.items())
        for i, x in a.items():
            for j, y in bitems:
                n = i + j
                if n >= t:
                    break
                out[n] = out.get(n, 0) + x * y
        return QSeries(out, t)

    __rmul__ = __mul__

    def shift(self, dindex):
        """Multiply by q^(dindex/48)."""
        return QSeries({n + dindex: c for n, c in self.coeffs.items()},
                       self.trunc + dindex)

    def truncate(self, trunc):
        return QSeries({n: c for n, c in self.coeffs.items() if n < trunc},
                       min(self.trunc, trunc))

    def inv(self):
        """Multiplicative inverse; the result is valid to trunc - 2*lead."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero series")
        e = self.lead
        t = self.trunc - 2 * e
        u0 = self.coeffs[e]
        u0inv = _coeff_div(1, u0)
        rest = sorted((n - e, c) for n, c in self.coeffs.items() if n != e)
        out = {0: u0inv}
        for n in range(1, self.trunc - e):
            # coefficient of index n in (unit part) * (partial inverse) must vanish
            s = 0
            for m, c in rest:
                if m > n:
                    break
                y = out.get(n - m)
                if y is not None:
                    s += c * y
            if s:
                v = _norm_coeff(-(s * u0inv))
                if v != 0:
                    out[n] = v
        return QSeries({n - e: c for n, c in out.items()}, t)

    def __pow__(self, n: int):
        if n == 0:
            rel = self.trunc - self.lead if self.coeffs else self.trunc
            return QSeries.one(rel)
        if n < 0:
            return self.inv() ** (-n)
        r = None
        b = self
        while n:
            if n & 1:
                r = b if r is None else r * b
            n >>= 1
            if n:
                b = b * b
        return r

    def derivative(self, step_index=GRID):
        """Formal derivative d/dp with p = q^(step_index/48).

        step_index=48 is d/dq; step_index=24 differentiates with respect
        to q^(1/2).
        """
        out = {}
        for n, c in self.coeffs.items():
            out[n - step_index] = c * Fraction(n, step_index)
        return QSeries(out, self.trunc - step_index)

    def twist(self):
        """Coefficient-wise phase q^(n/48) -> zeta_48^n q^(n/48) (the
        T-transformation on expansions with trivial multiplier stripped)."""
        out = {}
        for n, c in self.coeffs.items():
            out[n] = zeta_pow(n) * Cyclo.coerce(c)
        return QSeries(out, self.trunc)

    def phase_mul(self, phase: Cyclo):
        return QSeries({n: phase * Cyclo.coerce(c) for n, c in self.coeffs.items()},
                       self.trunc)

    def demote_rational(self):
        """Assert every coefficient is rational and strip Cyclo wrappers."""
        out = {}
        for n, c in self.coeffs.items():
            if isinstance(c, Cyclo):
                out[n] = c.rational()
            else:
                out[n] = c
        return QSeries(out, self.trunc)

    # -- fractional powers -----------------------------------------------------

    def pow_rational(self, r) -> "QSeries":
        """a^r for rational r via formal exp(r log u) on the unit part.

        Requires leading coefficient exactly 1; the shifted leading
        exponent r*lead must land back on the 1/48 grid.
        """
        r = Fraction(r)
        if r.denominator == 1:
            return self ** int(r)
        if self.is_zero():
            raise ZeroDivisionError("fractional power of the zero series")
        e = self.lead
        if self.coeffs[e] != 1:
            raise ValueError("fractional power needs leading coefficient 1, got %s"
                             % (self.coeffs[e],))
        re = r * e
        if re.denominator != 1:
            raise GridError("leading exponent %s/48 times %s leaves the 1/48 grid"
                            % (e, r))
        u = QSeries({n - e: c for n, c in self.coeffs.items()}, self.trunc - e)
        x = _exp(_log(u).scale(r))
        return x.shift(int(re))

    # -- comparison and display -------------------------------------------------

    def agrees_with(self, other, upto=None) -> bool:
        """Equality of coefficients up to the common truncation."""
        t = min(self.trunc, other.trunc)
        if upto is not None:
            t = min(t, upto)
        for n in set(self.coeffs) | set(other.coeffs):
            if n < t and self.coeff(n) != other.coeff(n):
                return False
        return True

    def first_difference(self, other, upto=None):
        """Smallest index where the two series differ, or None."""
        t = min(self.trunc, other.trunc)
        if upto is not None:
            t = min(t, upto)
        diffs = [n for n in set(self.coeffs) | set(other.coeffs)
                 if n < t and self.coeff(n) != other.coeff(n)]
        return min(diffs) if diffs else None

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for n in self.support():
            c = self.coeffs[n]
            e = Fraction(n, GRID)
            if e == 0:
                parts.append(str(c))
            else:
                es = ("q" if e == 1 else
                      "q^%d" % e if e.denominator == 1 else
                      "q^(%s)" % e)
                cs = "" if c == 1 else ("-" if c == -1 else str(c) + " ")
                parts.append(cs + es)
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__

    # -- serialization -----------------------------------------------------------

    def to_json(self):
        terms = []
        for n in self.support():
            c = self.coeffs[n]
            if isinstance(c, Cyclo):
                raise ValueError("twisted series are not JSON-serializable")
            f = Fraction(c)
            terms.append([n, "%d/%d" % (f.numerator, f.denominator)
                          if f.denominator != 1 else str(f.numerator)])
        return {"grid": GRID, "trunc": self.trunc, "terms": terms}

    @staticmethod
    def from_json(obj):
        if obj.get("grid") != GRID:
            raise ValueError("unsupported grid %r" % obj.get("grid"))
        return QSeries({int(n): Fraction(v) for n, v in obj["terms"]},
                       obj["trunc"])


# -- exp/log kernels ------------------------------------------------------------


def _log(u: QSeries) -> QSeries:
    """Formal logarithm of u = 1 + (positive-index part)."""
    assert u.coeff(0) == 1
    du = u.derivative()
    v = du * u.inv()  # valid to trunc - GRID
    out = {}
    for n, c in v.coeffs.items():
        m = n + GRID
        out[m] = c * Fraction(GRID, m)
    return QSeries(out, v.trunc + GRID)


def _exp(v: QSeries) -> QSeries:
    """Formal exponential of v with v(0) = 0 (positive leading index)."""
    if v.is_zero():
        return QSeries.one(v.trunc)
    assert v.lead > 0
    t = v.trunc
    src = sorted(v.coeffs.items())
    out = {0: 1}
    # E' = v' E  =>  n E_n = sum_i i v_i E_{n-i}
    for n in range(v.lead, t):
        s = 0
        for i, vc in src:
            if i > n:
                break
            y = out.get(n - i)
            if y is not None:
                s += vc * y * i
        if s:
            c = _norm_coeff(s * Fraction(1, n))
            if c != 0:
                out[n] = c
    return QSeries(out, t)


# -- spec-level operation aliases -------------------------------------------------


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def series_inv(a: QSeries) -> QSeries:
    return a.inv()


def series_pow_rational(a: QSeries, r) -> QSeries:
    return a.pow_rational(r)


def series_derivative(a: QSeries) -> QSeries:
    return a.derivative()


def t_twist(a: QSeries) -> QSeries:
    return a.twist()


def denominator_profile(a: QSeries):
    """Running lcm of coefficient denominators, in index order."""
    out = []
    acc = 1
    for n in a.support():
        c = a.coeffs[n]
        d = c.denominator if isinstance(c, Fraction) else 1
        acc = acc * d // gcd(acc, d)
        out.append(acc)
    return out


# -- the catalog of standard expansions -------------------------------------------


def euler_product(trunc) -> QSeries:
    """prod_{n>=1} (1 - q^n) via the pentagonal number expansion."""
    out = {}
    k = 1
    out[0] = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if GRID * g1 >= trunc and GRID * g2 >= trunc:
            break
        s = -1 if k % 2 else 1
        if GRID * g1 < trunc:
            out[GRID * g1] = s
        if GRID * g2 < trunc:
            out[GRID * g2] = s
        k += 1
    return QSeries(out, trunc)


def _prod_one_plus_qn(trunc) -> QSeries:
    """prod (1 + q^n) = prod (1-q^{2n}) / prod (1-q^n)."""
    num = QSeries({2 * n: c for n, c in euler_product((trunc + 1) // 2).coeffs.items()},
                  trunc)
    return num * euler_product(trunc).inv()


def _prod_half_steps(trunc, sign) -> QSeries:
    """prod_{n>=1} (1 + sign*q^(n-1/2))."""
    s = QSeries.one(trunc)
    idx = 24
    while idx < trunc:
        s = s * QSeries({0: 1, idx: sign}, trunc)
        idx += GRID
    return s


def eta(trunc=DEFAULT_TRUNC) -> QSeries:
    return euler_product(trunc - 2).shift(2)


def theta_Z(trunc=DEFAULT_TRUNC) -> QSeries:
    out = {0: 1}
    n = 1
    while 24 * n * n < trunc:
        out[24 * n * n] = 2
        n += 1
    return QSeries(out, trunc)


def theta_Z_half(trunc=DEFAULT_TRUNC) -> QSeries:
    # sum over n of q^((n+1/2)^2/2); exponent index 24 n(n+1) + 6
    out = {}
    n = 0
    while 24 * n * (n + 1) + 6 < trunc:
        out[24 * n * (n + 1) + 6] = 2
        n += 1
    return QSeries(out, trunc)


def _sigma3(n):
    s = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            s += d ** 3
            e = n // d
            if e != d:
                s += e ** 3
        d += 1
    return s


def E4(trunc=DEFAULT_TRUNC) -> QSeries:
    out = {0: 1}
    n = 1
    while GRID * n < trunc:
        out[GRID * n] = 240 * _sigma3(n)
        n += 1
    return QSeries(out, trunc)


def delta(trunc=DEFAULT_TRUNC) -> QSeries:
    return eta(trunc) ** 24


def j_function(trunc=DEFAULT_TRUNC) -> QSeries:
    # E4^3 starts at 0 and delta at q, so extend the working precision so
    # that the quotient is valid to `trunc`.
    t = trunc + 2 * GRID
    return (E4(t) ** 3) * delta(t).inv()


def cbrt_j(trunc=DEFAULT_TRUNC) -> QSeries:
    t = trunc + GRID
    return E4(t) * (eta(t) ** 8).inv()


def j_theta(trunc=DEFAULT_TRUNC) -> QSeries:
    # (Theta_Z / eta)^12
    t = trunc + 30
    return (theta_Z(t) * eta(t).inv()) ** 12


def chi_half(trunc=DEFAULT_TRUNC) -> QSeries:
    return _prod_half_steps(trunc + 1, +1).shift(-1)


def chi_half_minus(trunc=DEFAULT_TRUNC) -> QSeries:
    return _prod_half_steps(trunc + 1, -1).shift(-1)


def chi_ising_0(trunc=DEFAULT_TRUNC) -> QSeries:
    # (chi_V + e^{2 pi i c/24} chi_V|_T)/2 at c = 1/2: the integer-offset part
    x = chi_half(trunc)
    sym = x + x.twist().phase_mul(zeta_pow(1))
    return sym.demote_rational().scale(Fraction(1, 2))


def chi_ising_half(trunc=DEFAULT_TRUNC) -> QSeries:
    x = chi_half(trunc)
    anti = x - x.twist().phase_mul(zeta_pow(1))
    return anti.demote_rational().scale(Fraction(1, 2))


def chi_ising_16(trunc=DEFAULT_TRUNC) -> QSeries:
    # (1/sqrt(2)) sqrt(Theta_{Z+1/2}/eta): the factor 2 of the theta series
    # cancels the normalization, leaving q^(1/24) sqrt(unit part).
    t = trunc + 8
    s = theta_Z_half(t) * eta(t).inv()
    e = s.lead
    u = QSeries({n - e: _coeff_div(c, s.coeffs[e]) for n, c in s.coeffs.items()},
                s.trunc - e)
    return u.pow_rational(Fraction(1, 2)).shift(e // 2)


def cusp1_chi_half(trunc=DEFAULT_TRUNC) -> QSeries:
    return _prod_one_plus_qn(trunc - 2).shift(2)


def vacuum(c, trunc=DEFAULT_TRUNC) -> QSeries:
    """q^(-c/24) prod_{n>=2} 1/(1-q^n), the vacuum module character (c > 1)."""
    c = Fraction(c)
    shift = Fraction(-2 * c)
    if shift.denominator != 1:
        raise GridError("rank %s is not half-integral" % c)
    t = trunc - int(shift)
    body = euler_product(t).inv() * QSeries({0: 1, GRID: -1}, t)
    return body.shift(int(shift))


def generic_module(c, h, trunc=DEFAULT_TRUNC) -> QSeries:
    """q^(-c/24+h) prod_{n>=1} 1/(1-q^n)."""
    shift = Fraction(h) * GRID - Fraction(2 * Fraction(c))
    if shift.denominator != 1:
        raise GridError("offset -c/24+h off the 1/48 grid")
    t = trunc - int(shift)
    return euler_product(t).inv().shift(int(shift))


_CATALOG = {
    "eta": eta,
    "theta_Z": theta_Z,
    "theta_Z_half": theta_Z_half,
    "E4": E4,
    "delta": delta,
    "j": j_function,
    "cbrt_j": cbrt_j,
    "j_theta": j_theta,
    "chi_half": chi_half,
    "chi_half_minus": chi_half_minus,
    "chi_ising_0": chi_ising_0,
    "chi_ising_half": chi_ising_half,
    "chi_ising_16": chi_ising_16,
    "cusp1_chi_half": cusp1_chi_half,
}


def standard_series(name, trunc=DEFAULT_TRUNC, c=None, h=None) -> QSeries:
    """Catalog dispatch; `vacuum` takes c, `generic_module` takes c and h."""
    key = name.replace("-", "_")
    if key == "vacuum":
        if c is None:
            raise ValueError("vacuum needs a rank c")
        return vacuum(c, trunc)
    if key == "generic_module":
        if c is None or h is None:
            raise ValueError("generic_module needs rank c and weight h")
        return generic_module(c, h, trunc)
    if key not in _CATALOG:
        raise ValueError("unknown standard series %r (have: %s)"
                         % (name, ", ".join(sorted(_CATALOG) + ["vacuum", "generic_module"])))
    return _CATALOG[key](trunc).truncate(trunc)


def standard_names():
    return sorted(_CATALOG) + ["vacuum", "generic_module"]
