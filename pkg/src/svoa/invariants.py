"""Sparse trivariate polynomial arithmetic, the matrix-group action on
polynomials, and the constraint solve for the degree-48 weight-enumerator
polynomial of the moonshine module.

The group action substitutes (a, b, c) -> g.(a, b, c).  Substitution is
performed through a PLU decomposition of g into variable permutations,
diagonal rescalings and single shears x_s -> x_s + t*x_u, which keeps the
blow-up per stage linear in the degree instead of expanding powers of full
linear forms.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .cyclo import Cyclo, cyc_zero
from .qseries import GRID, QSeries, chi_ising_0, chi_ising_16, chi_ising_half

NVARS = 3


def _norm_coeff(c):
    if isinstance(c, Cyclo):
        if c.is_rational():
            c = c.rational()
        else:
            return c
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class MultiPoly:
    """Polynomial in a, b, c as a sparse map (i, j, k) -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = {}
        for mono, c in terms.items():
            c = _norm_coeff(c)
            if c == 0 or (isinstance(c, Cyclo) and c.is_zero()):
                continue
            self.terms[mono] = c

    @staticmethod
    def zero():
        return MultiPoly({})

    @staticmethod
    def constant(c):
        return MultiPoly({(0, 0, 0): c})

    @staticmethod
    def variable(idx):
        mono = tuple(1 if i == idx else 0 for i in range(NVARS))
        return MultiPoly({mono: 1})

    def coeff(self, i, j, k):
        return self.terms.get((i, j, k), 0)

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(m) for m in self.terms), default=0)

    def is_homogeneous(self):
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MultiPoly(out)

    def __neg__(self):
        return MultiPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        if s == 0:
            return MultiPoly.zero()
        return MultiPoly({m: c * s for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            return self.scale(other)
        out = {}
        for (i1, j1, k1), c1 in self.terms.items():
            for (i2, j2, k2), c2 in other.terms.items():
                m = (i1 + i2, j1 + j2, k1 + k2)
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        r = MultiPoly.constant(1)
        b = self
        while n:
            if n & 1:
                r = r * b
            n >>= 1
            if n:
                b = b * b
        return r

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            mono = "".join("%s^%d" % (v, e) if e > 1 else v
                           for v, e in zip("abc", m) if e)
            parts.append("%s %s" % (c, mono) if mono else str(c))
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self):
        out = []
        for (i, j, k) in sorted(self.terms):
            c = self.terms[(i, j, k)]
            if isinstance(c, Cyclo):
                raise ValueError("cyclotomic coefficients are not JSON-serializable")
            out.append([i, j, k, str(Fraction(c))])
        return out

    @staticmethod
    def from_json(rows):
        return MultiPoly({(int(i), int(j), int(k)): Fraction(v)
                          for i, j, k, v in rows})


# -- linear substitution ------------------------------------------------------


def _shear(P: MultiPoly, s: int, t: int, lam) -> MultiPoly:
    """Substitute x_s -> x_s + lam * x_t (s != t)."""
    if lam == 0 or (isinstance(lam, Cyclo) and lam.is_zero()):
        return P
    powers = {0: 1}
    out = {}
    for mono, c in P.terms.items():
        e = mono[s]
        if e == 0:
            out[mono] = out.get(mono, 0) + c
            continue
        for r in range(e + 1):
            if r not in powers:
                powers[r] = _norm_coeff(powers[r - 1] * lam)
            m = list(mono)
            m[s] = e - r
            m[t] += r
            m = tuple(m)
            out[m] = out.get(m, 0) + c * comb(e, r) * powers[r]
    return MultiPoly(out)


def _rescale(P: MultiPoly, scales) -> MultiPoly:
    """Substitute x_i -> scales[i] * x_i."""
    maxdeg = P.degree()
    pows = []
    for s in scales:
        col = [1]
        for _ in range(maxdeg):
            col.append(_norm_coeff(col[-1] * s))
        pows.append(col)
    out = {}
    for mono, c in P.terms.items():
        f = c
        for v in range(NVARS):
            if mono[v]:
                f = f * pows[v][mono[v]]
        out[mono] = out.get(mono, 0) + f
    return MultiPoly(out)


def _permute(P: MultiPoly, perm) -> MultiPoly:
    """Substitute x_i -> x_{perm[i]}."""
    out = {}
    for mono, c in P.terms.items():
        m = [0] * NVARS
        for v in range(NVARS):
            m[perm[v]] += mono[v]
        out[tuple(m)] = c
    return MultiPoly(out)


def poly_act(g, P: MultiPoly) -> MultiPoly:
    """P(g.(a,b,c)) expanded and collected.

    g is a CycMatrix of dimension 3; the substitution image of variable
    x_s is sum_t g[s][t] x_t.
    """
    n = g.n
    if n != NVARS:
        raise ValueError("action needs a 3x3 matrix")
    # PA = LU with partial pivoting; op_A = op_U . op_L . op_{P^-1}
    a = [list(r) for r in g.rows]
    perm = list(range(n))
    lower = [[cyc_zero() for _ in range(n)] for _ in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("singular substitution matrix")
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            perm[col], perm[piv] = perm[piv], perm[col]
            lower[col], lower[piv] = lower[piv], lower[col]
        inv_p = a[col][col].inv()
        for r in range(col + 1, n):
            f = a[r][col] * inv_p
            lower[r][col] = f
            if not f.is_zero():
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    # a now holds U; perm holds the row permutation pi with (PA)[r] = A[perm[r]]
    # Apply op_{P^{-1}}: x_{perm[r]} -> x_r, i.e. substitution x_i -> x_{pos[i]}
    pos = [0] * n
    for r, p in enumerate(perm):
        pos[p] = r
    out = _permute(P, pos)
    # op_L: unit lower triangular, shears ordered column-major
    for col in range(n):
        for row in range(col + 1, n):
            out = _shear(out, row, col, lower[row][col])
    # op_U = op_{U'} . op_D with U = D U'
    diag = [a[i][i] for i in range(n)]
    out = _rescale(out, diag)
    inv_diag = [d.inv() for d in diag]
    for col in range(n - 1, -1, -1):
        for row in range(col):
            out = _shear(out, row, col, a[row][col] * inv_diag[row])
    return out


# -- the invariant polynomials -------------------------------------------------


def _sym_pairs(pairs, cpow):
    """Expand [(i, j, coeff), ...] with a<->b mirror images, times c^cpow."""
    out = {}
    for i, j, c in pairs:
        out[(i, j, cpow)] = c
        out[(j, i, cpow)] = c
    return out


def basis_invariants():
    """The four generating invariants of the order-1152 matrix group in
    degrees 3, 24, 24 and 48."""
    p1 = MultiPoly({(2, 0, 1): 1, (0, 2, 1): -1})

    p2_terms = {}
    p2_terms.update(_sym_pairs([(23, 1, -1), (21, 3, 1), (19, 5, 21),
                                (17, 7, -85), (15, 9, 134), (13, 11, -70)], 0))
    p2_terms.update(_sym_pairs([(16, 0, -2), (14, 2, -240), (12, 4, -3640),
                                (10, 6, -16016)], 8))
    p2_terms[(8, 8, 8)] = -25740
    p2_terms.update(_sym_pairs([(7, 1, 256), (5, 3, 1792)], 16))
    p2 = MultiPoly(p2_terms)

    p3_terms = {}
    p3_terms.update(_sym_pairs([(23, 1, 3), (21, 3, 253), (19, 5, 5313),
                                (17, 7, 43263), (15, 9, 163438),
                                (13, 11, 312018)], 0))
    p3_terms[(0, 0, 24)] = -256
    p3 = MultiPoly(p3_terms)

    # p4 = (((a+b)^16 + (a-b)^16)/2 + 128 c^16)^3, the cube of the E8 enumerator
    u = {}
    for i in range(0, 17, 2):
        u[(16 - i, i, 0)] = comb(16, i)
    u[(0, 0, 16)] = 128
    p4 = MultiPoly(u) ** 3

    return p1, p2, p3, p4


def check_invariance(polys=None, ranks=(Fraction(1, 2),)):
    """Verify that the generating polynomials are fixed by S and T.

    A failure aborts with a diagnostic as it signals a broken action
    convention, not recoverable data.
    """
    from .modrep import character_rep
    if polys is None:
        polys = basis_invariants()
    for c in ranks:
        T, S = character_rep(c)
        for name, p in zip(("p1", "p2", "p3", "p4"), polys):
            for gname, g in (("T", T), ("S", S)):
                if poly_act(g, p) != p:
                    raise AssertionError(
                        "%s is not fixed by %s at rank %s: the (a,b,c) -> "
                        "g.(a,b,c) action convention is violated" % (name, gname, c))
    return True


# -- the published degree-48 solution -------------------------------------------


def _published_monster_terms():
    t = {}
    t.update(_sym_pairs([(48, 0, 1), (44, 4, 804), (42, 6, 10560),
                         (40, 8, 174306), (38, 10, 1615680),
                         (36, 12, 16382612), (34, 14, 116707584),
                         (32, 16, 554455407), (30, 18, 1786512640),
                         (28, 20, 4077522504), (26, 22, 6680893824)], 0))
    t[(24, 24, 0)] = 7891186524
    t.update(_sym_pairs([(37, 3, 1536), (35, 5, 155136), (33, 7, 4773888),
                         (31, 9, 70699008), (29, 11, 596299776),
                         (27, 13, 3100876800), (25, 15, 10370684928),
                         (23, 17, 22879881216), (21, 19, 33843588096)], 8))
    t.update(_sym_pairs([(30, 2, 16512), (28, 4, 1112832), (26, 6, 28038528),
                         (24, 8, 325307904), (22, 10, 1996192896),
                         (20, 12, 6985020672), (18, 14, 14585195904)], 16))
    t[(16, 16, 16)] = 18596004864
    t.update(_sym_pairs([(23, 1, 168960), (21, 3, 14306304),
                         (19, 5, 300432384), (17, 7, 2446205952),
                         (15, 9, 9241528320), (13, 11, 17642698752)], 24))
    t.update(_sym_pairs([(16, 0, 9024), (14, 2, 941568), (12, 4, 14445312),
                         (10, 6, 63361536)], 32))
    t[(8, 8, 32)] = 102007680
    t.update(_sym_pairs([(7, 1, 135168), (5, 3, 946176)], 40))
    t[(0, 0, 48)] = 2048
    return t


DEFAULT_CONSTRAINTS = (
    ((48, 0, 0), 1),
    ((46, 2, 0), 0),
    ((39, 1, 8), 0),
    ((32, 0, 16), 0),
    ((44, 4, 0), 804),
    ((16, 0, 32), 9024),
    ((0, 0, 48), 2048),
)


def degree48_basis():
    """The 7 products p1^16, p1^8 p2, p1^8 p3, p2^2, p2 p3, p3^2, p4 that
    span the degree-48 invariants."""
    p1, p2, p3, p4 = basis_invariants()
    p1_8 = p1 ** 8
    return (p1_8 * p1_8, p1_8 * p2, p1_8 * p3, p2 * p2, p2 * p3, p3 * p3, p4)


def basis_rank():
    """Rank of the coefficient matrix of the degree-48 basis (linear
    independence check)."""
    basis = degree48_basis()
    monomials = sorted(set().union(*[set(b.terms) for b in basis]))
    rows = [[Fraction(b.terms.get(m, 0)) for b in basis] for m in monomials]
    return _rank(rows)


def _rank(rows):
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv_p = Fraction(1) / rows[rank][col]
        rows[rank] = [x * inv_p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


class ConstraintError(ValueError):
    pass


def solve_monster_polynomial(constraints=None, verify_published=True) -> MultiPoly:
    """Solve for the degree-48 weight enumerator from multiplicity
    constraints, then re-check every published coefficient."""
    if constraints is None:
        constraints = DEFAULT_CONSTRAINTS
    constraints = list(constraints)
    basis = degree48_basis()
    if len(constraints) < len(basis):
        raise ConstraintError("need at least %d constraints, got %d"
                              % (len(basis), len(constraints)))
    for (i, j, k), _ in constraints:
        if i + j + k != 48 or min(i, j, k) < 0:
            raise ConstraintError("constraint monomial (%d,%d,%d) is not "
                                  "degree 48" % (i, j, k))
    if len({m for m, _ in constraints}) != len(constraints):
        raise ConstraintError("duplicate constraint monomials")
    mat = [[Fraction(b.coeff(*m)) for b in basis] for m, _ in constraints]
    rhs = [Fraction(v) for _, v in constraints]
    lam = _solve_linear(mat, rhs)
    P = MultiPoly.zero()
    for coeff, b in zip(lam, basis):
        P = P + b.scale(coeff)
    if verify_published:
        published = _published_monster_terms()
        if P.terms != {m: c for m, c in published.items()}:
            diffs = []
            for m in set(P.terms) | set(published):
                if P.terms.get(m, 0) != published.get(m, 0):
                    diffs.append((m, published.get(m, 0), P.terms.get(m, 0)))
            raise ConstraintError("solved polynomial disagrees with the "
                                  "published coefficients, e.g. %s" % (diffs[:3],))
        rel = P.coeff(7, 1, 40) - (9 * 2 ** 14 - 6 * P.coeff(0, 0, 48))
        if rel != 0:
            raise ConstraintError("degree-3 highest-weight relation violated")
    return P


def _solve_linear(mat, rhs):
    n = len(mat[0])
    rows = [list(r) + [v] for r, v in zip(mat, rhs)]
    pivots = []
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            raise ConstraintError("constraint system is singular")
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv_p = Fraction(1) / rows[rank][col]
        rows[rank] = [x * inv_p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, len(rows)):
        if rows[r][n] != 0:
            raise ConstraintError("constraint system is inconsistent")
    return [rows[i][n] for i in range(n)]


_MONSTER_CACHE = None


def monster_polynomial() -> MultiPoly:
    """The solved weight-enumerator polynomial (cached)."""
    global _MONSTER_CACHE
    if _MONSTER_CACHE is None:
        _MONSTER_CACHE = solve_monster_polynomial()
    return _MONSTER_CACHE


# -- evaluation at the three characters -------------------------------------------


def evaluate_at_characters(P: MultiPoly, trunc) -> QSeries:
    """Substitute a, b, c by the weight-0, 1/2, 1/16 characters of the
    rank-1/2 minimal model."""
    imax = max((m[0] for m in P.terms), default=0)
    jmax = max((m[1] for m in P.terms), default=0)
    kmax = max((m[2] for m in P.terms), default=0)
    deg = P.degree()
    # working precision: every character starts at q^(-1/48)
    t = trunc + deg + GRID
    chars = (chi_ising_0(t), chi_ising_half(t), chi_ising_16(t))
    pows = []
    for x, emax in zip(chars, (imax, jmax, kmax)):
        col = [QSeries.one(t)]
        for _ in range(emax):
            col.append(col[-1] * x)
        pows.append(col)
    acc = QSeries.zero(t)
    for (i, j, k), c in P.terms.items():
        term = pows[0][i]
        if j:
            term = term * pows[1][j]
        if k:
            term = term * pows[2][k]
        acc = acc + term.scale(c)
    return acc.truncate(trunc)
