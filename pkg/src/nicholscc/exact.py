"""Exact scalars and dense linear algebra.

Rationals are stdlib ``Fraction``.  Roots of unity are stored as their
angle ``t`` in Q/Z (the root is exp(2 pi i t)), so multiplication is addition
of angles.  ``CyclotomicNumber`` is an element of Q(zeta_N) kept as a
coefficient vector modulo the N-th cyclotomic polynomial.

Matrices are plain lists of rows.  One scalar domain per matrix: either
``Fraction``/``int`` or ``CyclotomicNumber``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import SingularMatrix

__all__ = [
    "parse_rational", "format_rational", "RationalAngle", "angle_mul",
    "is_primitive_root", "CyclotomicNumber", "cyclotomic_polynomial",
    "euler_phi", "exact_rank", "exact_solve", "nullspace", "solve_any",
    "transpose", "matmul", "matvec", "lcm",
]


def lcm(*values):
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def parse_rational(text):
    """Parse ``"a/b"`` or ``"a"`` (ints and Fractions pass through)."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    return Fraction(str(text).strip())


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------- angles

@dataclass(frozen=True, order=True)
class RationalAngle:
    """A root of unity exp(2 pi i t), with t reduced into [0, 1)."""

    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "t", Fraction(self.t) % 1)

    @classmethod
    def parse(cls, text):
        return cls(parse_rational(text))

    def __mul__(self, other):
        return RationalAngle(self.t + other.t)

    def __truediv__(self, other):
        return RationalAngle(self.t - other.t)

    def __pow__(self, n):
        return RationalAngle(self.t * n)

    def inverse(self):
        return RationalAngle(-self.t)

    @property
    def order(self):
        return self.t.denominator

    def is_one(self):
        return self.t == 0

    def __str__(self):
        return format_rational(self.t)

    def __repr__(self):
        return f"RationalAngle({format_rational(self.t)})"


ONE_ANGLE = RationalAngle(0)
MINUS_ONE_ANGLE = RationalAngle(Fraction(1, 2))


def angle_mul(a, b):
    return a * b


def is_primitive_root(a, ell):
    """True iff ``a`` is a primitive ``ell``-th root of unity."""
    return a.t.denominator == ell


# ---------------------------------------------------------------- cyclotomics

def euler_phi(n):
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients of Phi_n, lowest degree first (monic)."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def _poly_exact_div(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num), "non-exact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def _power_table(n):
    """x^k mod Phi_n for 0 <= k < n, as integer vectors of length phi(n)."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    vec = [1] + [0] * (deg - 1)
    for _ in range(n):
        rows.append(tuple(vec))
        # multiply by x and reduce
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            for j in range(deg):
                vec[j] -= top * phi[j]
    return tuple(rows)


def _reduce(coeffs, n):
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    coeffs = list(coeffs)
    for i in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[i]
        if c:
            base = i - deg
            for j in range(deg):
                if phi[j]:
                    coeffs[base + j] -= c * phi[j]
    coeffs = coeffs[:deg]
    coeffs += [0] * (deg - len(coeffs))
    return coeffs


class CyclotomicNumber:
    """Element of Q(zeta_N) as sum_k c_k zeta_N^k, 0 <= k < phi(N)."""

    __slots__ = ("n", "c")

    def __init__(self, n, coeffs=()):
        self.n = n
        deg = len(cyclotomic_polynomial(n)) - 1
        coeffs = list(coeffs)
        if len(coeffs) > deg:
            coeffs = _reduce(coeffs, n)
        coeffs += [0] * (deg - len(coeffs))
        self.c = tuple(Fraction(x) if not isinstance(x, (int, Fraction)) else x
                       for x in coeffs)

    # -- constructors
    @classmethod
    def rational(cls, n, value):
        return cls(n, [value])

    @classmethod
    def root(cls, n, k):
        """zeta_n ** k."""
        return cls._raw(n, _power_table(n)[k % n])

    @classmethod
    def from_angle(cls, angle, n):
        t = angle.t if isinstance(angle, RationalAngle) else Fraction(angle) % 1
        if n % t.denominator:
            raise ValueError(f"angle {t} does not live in Q(zeta_{n})")
        return cls.root(n, int(t * n))

    @classmethod
    def from_group_ring(cls, n, counts):
        """Reduce sum_k counts[k] zeta^k (k over all residues mod n)."""
        table = _power_table(n)
        out = [0] * len(table[0])
        for k, a in enumerate(counts):
            if a:
                row = table[k]
                for j, b in enumerate(row):
                    if b:
                        out[j] += a * b
        return cls._raw(n, out)

    @classmethod
    def _raw(cls, n, coeffs):
        obj = cls.__new__(cls)
        obj.n = n
        obj.c = tuple(coeffs)
        return obj

    # -- coercion
    def embed(self, m):
        """Image in Q(zeta_m) for a multiple m of the conductor."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"cannot embed Q(zeta_{self.n}) into Q(zeta_{m})")
        step = m // self.n
        table = _power_table(m)
        out = [0] * len(table[0])
        for k, a in enumerate(self.c):
            if a:
                for j, b in enumerate(table[(k * step) % m]):
                    if b:
                        out[j] += a * b
        return CyclotomicNumber._raw(m, out)

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.n == self.n:
                return self, other
            m = lcm(self.n, other.n)
            return self.embed(m), other.embed(m)
        if isinstance(other, (int, Fraction)):
            return self, CyclotomicNumber(self.n, [other])
        return NotImplemented

    # -- arithmetic
    def __add__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return pair
        a, b = pair
        return CyclotomicNumber._raw(a.n, [x + y for x, y in zip(a.c, b.c)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self.n, [-x for x in self.c])

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return pair
        a, b = pair
        return CyclotomicNumber._raw(a.n, [x - y for x, y in zip(a.c, b.c)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber._raw(self.n, [x * other for x in self.c])
        pair = self._coerce(other)
        if pair is NotImplemented:
            return pair
        a, b = pair
        deg = len(a.c)
        if deg == 1:
            return CyclotomicNumber._raw(a.n, [a.c[0] * b.c[0]])
        prod = [0] * (2 * deg - 1)
        for i, x in enumerate(a.c):
            if x:
                for j, y in enumerate(b.c):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicNumber._raw(a.n, _reduce(prod, a.n))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        phi = [Fraction(x) for x in cyclotomic_polynomial(self.n)]
        inv = _poly_inverse_mod([Fraction(x) for x in self.c], phi)
        return CyclotomicNumber(self.n, inv)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber._raw(self.n, [Fraction(x) / other for x in self.c])
        a, b = self._coerce(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    # -- comparisons
    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.c[0] == other and not any(self.c[1:])
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._coerce(other)
        return a.c == b.c

    def __hash__(self):
        if not any(self.c[1:]):
            return hash(self.c[0])
        return hash((self.n, self.c))

    def is_rational(self):
        return not any(self.c[1:])

    def __repr__(self):
        terms = []
        for k, x in enumerate(self.c):
            if x:
                terms.append(format_rational(x) + (f"*z{self.n}^{k}" if k else ""))
        return " + ".join(terms) if terms else "0"


def _poly_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    b = _poly_trim(list(b))
    if len(a) < len(b):
        return [Fraction(0)], _poly_trim(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, d in enumerate(b):
                a[i + j] -= c * d
    return q, _poly_trim(a[:len(b) - 1] or [Fraction(0)])


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


def _poly_inverse_mod(a, m):
    """Inverse of a modulo the irreducible m (extended Euclid over Q)."""
    r0, r1 = _poly_trim(list(m)), _poly_trim(list(a))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while not (len(r1) == 1 and r1[0] == 0):
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    # r0 is a nonzero constant
    c = r0[0]
    return [x / c for x in s0]


# ---------------------------------------------------------------- matrices

def transpose(m):
    return [list(col) for col in zip(*m)]


def matmul(a, b):
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), 0) for col in bt] for row in a]


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v)), 0) for row in a]


def exact_rank(m, pivots=False):
    """Rank by fraction-free (Bareiss) elimination, first nonzero pivot.

    With ``pivots=True`` also return the pivot column indices; those
    columns form a basis of the column space.
    """
    rows = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in m]
    if not rows:
        return (0, []) if pivots else 0
    nrows, ncols = len(rows), len(rows[0])
    prev = 1
    r = 0
    piv = []
    for c in range(ncols):
        if r == nrows:
            break
        for i in range(r, nrows):
            if rows[i][c]:
                break
        else:
            continue
        if i != r:
            rows[r], rows[i] = rows[i], rows[r]
        p = rows[r][c]
        prow = rows[r]
        for i in range(r + 1, nrows):
            row = rows[i]
            f = row[c]
            if f:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j] - f * prow[j]) / prev
            else:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = (p * row[j]) / prev
            row[c] = 0
        prev = p
        piv.append(c)
        r += 1
    return (r, piv) if pivots else r


def _rref(m):
    """Reduced row echelon form over a field; returns (rows, pivot columns)."""
    rows = [[x if not isinstance(x, int) else Fraction(x) for x in r] for r in m]
    if not rows:
        return rows, []
    nrows, ncols = len(rows), len(rows[0])
    piv = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        for i in range(r, nrows):
            if rows[i][c]:
                break
        else:
            continue
        rows[r], rows[i] = rows[i], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        piv.append(c)
        r += 1
    return rows, piv


def exact_solve(a, b):
    """Solve the square nonsingular system a x = b exactly."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("exact_solve needs a square matrix")
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    rows, piv = _rref(aug)
    if len(piv) < n or piv[-1] == n:
        raise SingularMatrix("matrix is singular")
    return [rows[i][n] for i in range(n)]


def solve_any(a, b):
    """One solution of a x = b (free variables set to 0), or None."""
    if not a:
        return None if any(b) else []
    ncols = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    rows, piv = _rref(aug)
    if piv and piv[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(piv):
        x[c] = rows[i][ncols]
    return x


def nullspace(m, ncols=None):
    """Basis of {x : m x = 0}."""
    if not m:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    ncols = len(m[0])
    rows, piv = _rref(m)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(piv):
            v[c] = -rows[i][f]
        basis.append(v)
    return basis
