"""Finite matrix representations of the modular group on character vectors,
Molien series, and Verlinde fusion.

The rank c in (1/2)Z selects one of three representations on the span of
the even/odd/twisted characters: a 3x3 one for c in Z+1/2 and two 4x4
families for odd and even integer c.  T acts diagonally by the phases
e^{2 pi i(-c/24 + h)}, S by the displayed orthogonal matrix; the residual
sign freedom in the 4x4 S-matrices is resolved by requiring the modular
relations S^4 = 1, S^2 = (ST)^3 and (ST)^6 = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclo import Cyclo, cyc_one, cyc_zero, sqrt2, zeta_pow
from .qseries import GRID, QSeries


class CycMatrix:
    """Small dense matrix over Q(zeta_48), hashable for group closure."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(Cyclo.coerce(x) for x in r) for r in rows)
        self.n = len(rows)
        if any(len(r) != self.n for r in rows):
            raise ValueError("matrix must be square")
        self.rows = rows

    @staticmethod
    def identity(n):
        return CycMatrix([[cyc_one() if i == j else cyc_zero()
                           for j in range(n)] for i in range(n)])

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        n = self.n
        rows = []
        for i in range(n):
            ri = self.rows[i]
            row = []
            for j in range(n):
                acc = cyc_zero()
                for k in range(n):
                    x = ri[k]
                    if not x.is_zero():
                        y = other.rows[k][j]
                        if not y.is_zero():
                            acc = acc + x * y
                row.append(acc)
            rows.append(row)
        return CycMatrix(rows)

    def inv(self):
        """Gauss-Jordan inverse (n <= 4 in practice)."""
        n = self.n
        a = [list(r) for r in self.rows]
        b = [list(CycMatrix.identity(n).rows[i]) for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
            inv_p = a[col][col].inv()
            a[col] = [x * inv_p for x in a[col]]
            b[col] = [x * inv_p for x in b[col]]
            for r in range(n):
                if r != col and not a[r][col].is_zero():
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                    b[r] = [x - f * y for x, y in zip(b[r], b[col])]
        return CycMatrix(b)

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        r = CycMatrix.identity(self.n)
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def transpose(self):
        return CycMatrix([[self.rows[j][i] for j in range(self.n)]
                          for i in range(self.n)])

    def trace(self):
        t = cyc_zero()
        for i in range(self.n):
            t = t + self.rows[i][i]
        return t

    def elementary_symmetric(self, k):
        """k-th elementary symmetric function of the eigenvalues, i.e. the
        sum of the principal k x k minors."""
        from itertools import combinations
        n = self.n
        acc = cyc_zero()
        for idx in combinations(range(n), k):
            acc = acc + _det([[self.rows[i][j] for j in idx] for i in idx])
        return acc

    def det(self):
        return _det([list(r) for r in self.rows])

    def is_identity(self):
        return self == CycMatrix.identity(self.n)

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "CycMatrix(%s)" % (
            "; ".join(", ".join(repr(x) for x in r) for r in self.rows))


def _det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = cyc_zero()
    sign = 1
    for j in range(n):
        x = rows[0][j]
        if not x.is_zero():
            minor = [[rows[i][jj] for jj in range(n) if jj != j]
                     for i in range(1, n)]
            term = x * _det(minor)
            acc = acc + (term if sign > 0 else -term)
        sign = -sign
    return acc


# -- the character representation ---------------------------------------------


def _phase(e: Fraction) -> Cyclo:
    """e^(2 pi i e) for e with denominator dividing 48."""
    e48 = Fraction(e) * GRID
    if e48.denominator != 1:
        raise ValueError("phase exponent %s not on the 1/48 grid" % e)
    return zeta_pow(int(e48))


def character_rep(c) -> tuple[CycMatrix, CycMatrix]:
    """Return (T, S) acting on the character span for rank c in (1/2)Z.

    c in Z+1/2 gives the 3x3 matrices; odd c the 4x4 family with +-i/2
    entries; even c the 4x4 family with +-1/2 entries.  The sign variant
    is the unique one satisfying S^4 = 1, S^2 = (ST)^3, (ST)^6 = 1.
    """
    c = Fraction(c)
    if (2 * c).denominator != 1:
        raise ValueError("rank %s is not half-integral" % c)
    h = Fraction(1, 2)
    half = Fraction(1, 2)
    diag = [_phase(-c / 24), _phase(-c / 24 + h), _phase(-c / 24 + c / 8)]
    s2i = sqrt2() * Fraction(1, 2)  # 1/sqrt(2)
    if c.denominator == 2:
        T = _diag_matrix(diag)
        S = CycMatrix([[half, half, s2i],
                       [half, half, -s2i],
                       [s2i, -s2i, cyc_zero()]])
        _check_relations(S, T)
        return T, S
    # integer rank: duplicated twisted eigenvalue
    T = _diag_matrix(diag + [diag[2]])
    i_unit = zeta_pow(12)
    if int(c) % 2 == 1:
        upper = i_unit * Fraction(1, 2)
    else:
        upper = Cyclo.from_rational(half)
    candidates = []
    for sgn in (1, -1):
        u = upper * sgn
        S = CycMatrix([[half, half, half, half],
                       [half, half, -half, -half],
                       [half, -half, -u, u],
                       [half, -half, u, -u]])
        if _relations_hold(S, T):
            candidates.append(S)
    if not candidates:
        raise ValueError("no sign variant satisfies the modular relations at c=%s" % c)
    S = candidates[0]
    _check_relations(S, T)
    return T, S


def _diag_matrix(entries):
    n = len(entries)
    return CycMatrix([[entries[i] if i == j else cyc_zero()
                       for j in range(n)] for i in range(n)])


def _relations_hold(S, T) -> bool:
    ST = S * T
    return ((S ** 4).is_identity()
            and S * S == ST ** 3
            and (ST ** 6).is_identity())


def _check_relations(S, T):
    if not _relations_hold(S, T):
        raise AssertionError("modular relations S^4=1, S^2=(ST)^3, (ST)^6=1 violated")


# -- group closure ---------------------------------------------------------------


@dataclass(frozen=True)
class MatrixGroup:
    generators: tuple
    elements: frozenset

    @property
    def order(self):
        return len(self.elements)


def generate_group(gens, cap=10000) -> MatrixGroup:
    """BFS closure of the generated group; raises if `cap` is exceeded."""
    gens = tuple(gens)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    ident = CycMatrix.identity(n)
    elements = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                p = m * g
                if p not in elements:
                    elements.add(p)
                    new.append(p)
                    if len(elements) > cap:
                        raise RuntimeError("group closure exceeded cap %d" % cap)
        frontier = new
    return MatrixGroup(generators=gens, elements=frozenset(elements))


# -- Molien series -----------------------------------------------------------------


def molien(group: MatrixGroup, maxdeg: int) -> QSeries:
    """Molien series (1/|G|) sum_g 1/det(1 - g t) to degree `maxdeg`.

    Returned as a QSeries with t^k stored at grid index 48k.  Every
    coefficient is asserted rational (the imaginary parts cancel over the
    group sum) and is a nonnegative integer for an honest finite group.
    """
    classes = {}
    for g in group.elements:
        n = g.n
        cs = tuple(g.elementary_symmetric(k) for k in range(1, n + 1))
        classes[cs] = classes.get(cs, 0) + 1
    total = {k: cyc_zero() for k in range(maxdeg + 1)}
    for cs, count in classes.items():
        # det(1 - g t) = 1 - c1 t + c2 t^2 - ... ; invert by linear recurrence
        n = len(cs)
        dens = [(-1) ** (k + 1) * 1 for k in range(1, n + 1)]
        poly = [cs[k - 1] * ((-1) ** k) for k in range(1, n + 1)]  # t^k coeffs
        inv = [cyc_one()]
        for m in range(1, maxdeg + 1):
            acc = cyc_zero()
            for k in range(1, min(n, m) + 1):
                acc = acc + poly[k - 1] * inv[m - k]
            inv.append(-acc)
        for m in range(maxdeg + 1):
            total[m] = total[m] + inv[m] * count
    order = group.order
    out = {}
    for m, v in total.items():
        r = v.rational() / order  # raises if a nonreal part survived
        out[GRID * m] = r
    return QSeries(out, GRID * (maxdeg + 1))


# -- Verlinde fusion -----------------------------------------------------------------


@dataclass(frozen=True)
class FusionTensor:
    n: int
    N: tuple  # N[i][j][k]

    def __post_init__(self):
        for j in range(self.n):
            for k in range(self.n):
                if self.N[0][j][k] != (1 if j == k else 0):
                    raise ValueError("identity object law violated")
        for i in range(self.n):
            for j in range(self.n):
                for k in range(self.n):
                    if self.N[i][j][k] != self.N[j][i][k]:
                        raise ValueError("fusion symmetry violated")

    def product(self, i, j):
        """Decomposition of M_i x M_j as a coefficient tuple over all M_k."""
        return self.N[i][j]


def verlinde(S: CycMatrix) -> FusionTensor:
    """Fusion coefficients N_ij^k = sum_n S_in S_jn (S^-1)_nk / S_0n.

    Raises if any entry fails to be a nonnegative rational integer, which
    signals an S-matrix not of fusion type.
    """
    n = S.n
    Sinv = S.inv()
    for m in range(n):
        if S.rows[0][m].is_zero():
            raise ValueError("vanishing entry in the vacuum row")
    inv_row = [S.rows[0][m].inv() for m in range(n)]
    N = []
    for i in range(n):
        Ni = []
        for j in range(n):
            row = []
            for k in range(n):
                acc = cyc_zero()
                for m in range(n):
                    acc = acc + S.rows[i][m] * S.rows[j][m] * Sinv.rows[m][k] * inv_row[m]
                if not acc.is_rational():
                    raise ValueError("non-rational fusion coefficient at (%d,%d,%d)" % (i, j, k))
                v = acc.rational()
                if v.denominator != 1 or v < 0:
                    raise ValueError("fusion coefficient %s at (%d,%d,%d) is not a "
                                     "nonnegative integer" % (v, i, j, k))
                row.append(int(v))
            Ni.append(tuple(row))
        N.append(tuple(Ni))
    return FusionTensor(n=n, N=tuple(N))


def quantum_dimensions(S: CycMatrix):
    """The ratios S_i0 / S_00 (real cyclotomic numbers)."""
    d0 = S.rows[0][0]
    return [S.rows[i][0] / d0 for i in range(S.n)]
