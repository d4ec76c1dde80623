"""Wick-theorem OPEs of free-boson fields, screenings and modes.

All functions take the Gram matrix of the screening momenta first; with
phi_v = alpha_v . phi the basic contraction is phi_u(z) phi_v(w) ~ g_uv log(z-w).
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from ..charge import GramMatrix, solve_xi
from ..errors import (NonIntegerExponent, NotTotalDerivative, NoPrimary,
                      NotUnique, SingularMatrix, DegenerateMomenta)
from ..exact import exact_solve, nullspace, solve_any
from .fields import Field, dot, monomials

__all__ = [
    "OpeExpansion", "ope", "build_T", "screening_residue", "centralizer_basis",
    "mode_action", "is_primary", "primary_conditions", "total_derivative",
    "is_total_derivative", "find_primary", "gram_inverse", "unit",
]


def _g(g):
    return g if isinstance(g, GramMatrix) else GramMatrix(tuple(map(tuple, g)))


def unit(theta, i, scale=1):
    """Momentum scale * alpha_i."""
    return tuple(Fraction(scale) if j == i else Fraction(0) for j in range(theta))


class OpeExpansion(dict):
    """Pole order n -> Field (coefficient of (z-w)^-n); n <= 0 is regular."""

    def pole(self, n):
        return self.get(n, Field.zero(self.theta))

    def orders(self):
        return sorted((n for n, f in self.items() if f), reverse=True)

    def leading(self):
        o = self.orders()
        return (o[0], self[o[0]]) if o else (None, Field.zero(self.theta))

    def to_json(self):
        return {str(n): self[n].to_json() for n in self.orders()}


# Taylor expansion of :P(z) e^{mu.phi(z)}: around w, coefficient of x^n.

@lru_cache(maxsize=4096)
def _exp_series(mu, n):
    """E_0..E_n with e^{mu.phi(z)} = e^{mu.phi(w)} sum_m x^m E_m."""
    theta = len(mu)
    s = []
    for k in range(1, n + 1):
        s.append({((v, k),): mu[v] / factorial(k) for v in range(theta) if mu[v]})
    out = [{(): Fraction(1)}]
    for m in range(1, n + 1):
        acc = {}
        for k in range(1, m + 1):
            for m1, c1 in s[k - 1].items():
                for m2, c2 in out[m - k].items():
                    key = tuple(sorted(m1 + m2))
                    acc[key] = acc.get(key, 0) + Fraction(k, m) * c1 * c2
        out.append({k: v for k, v in acc.items() if v})
    return tuple(out)


def _poly_mul(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            key = tuple(sorted(m1 + m2))
            out[key] = out.get(key, 0) + c1 * c2
    return out


@lru_cache(maxsize=65536)
def _taylor(factors, mu, n):
    """Series of :prod d^a phi_u(z) e^{mu.phi(z)}: up to x^n, as a tuple of dicts."""
    series = [dict(x) for x in _exp_series(mu, n)]
    for (u, a) in factors:
        fs = [{((u, a + m),): Fraction(1, factorial(m))} for m in range(n + 1)]
        new = []
        for total in range(n + 1):
            acc = {}
            for m in range(total + 1):
                for k, v in _poly_mul(fs[m], series[total - m]).items():
                    acc[k] = acc.get(k, 0) + v
            new.append({k: v for k, v in acc.items() if v})
        series = new
    return tuple(series)


def _counts(mono):
    out = {}
    for f in mono:
        out[f] = out.get(f, 0) + 1
    return sorted(out.items())


def _contractions(g, ma, mb, gnu, mug):
    """Yield (coefficient, power, remaining A factors, remaining B factors).

    Contractions are enumerated over multisets: for factor types with
    multiplicities the number of Wick patterns with a given shape is
    c_A! c_B! / (e_A! l_A! e_B! l_B! prod K!), K the pair counts.
    """
    ta, tb = _counts(ma), _counts(mb)
    nb = len(tb)

    def b_side(paired, coef, power, left_a):
        out = [(coef, power, [])]
        for j, ((v, b), c) in enumerate(tb):
            free = c - paired[j]
            pre = Fraction(factorial(c), factorial(free))
            step = []
            for coef0, pow0, keep in out:
                for e in range(free + 1 if mug[v] else 1):
                    w = (coef0 * pre * Fraction(factorial(free), factorial(e) * factorial(free - e))
                         * (mug[v] * -factorial(b - 1)) ** e)
                    step.append((w, pow0 - e * b, keep + [(v, b)] * (free - e)))
            out = step
        for coef0, pow0, keep in out:
            yield coef0, pow0, tuple(left_a), tuple(keep)

    def pairs(i, j, rem, paired, coef, power, u, a, sign, done):
        # distribute ``rem`` copies of A type i over B types j, j+1, ...
        if j == nb:
            yield rem, coef, power
            return
        v, b = tb[j][0]
        cap = tb[j][1] - paired[j]
        top = min(rem, cap) if g[u][v] else 0
        for k in range(top + 1):
            if k:
                paired[j] += k
            w = coef * (g[u][v] * sign * factorial(a + b - 1)) ** k / factorial(k)
            yield from pairs(i, j + 1, rem - k, paired, w, power - k * (a + b), u, a, sign, done)
            if k:
                paired[j] -= k

    def a_side(i, paired, coef, power, left_a):
        if i == len(ta):
            yield from b_side(paired, coef, power, left_a)
            return
        (u, a), c = ta[i]
        sign = 1 if a % 2 else -1  # (-1)^(a-1)
        for e in range(c + 1 if gnu[u] else 1):
            w = coef * Fraction(factorial(c), factorial(e)) * (gnu[u] * sign * factorial(a - 1)) ** e
            for rem, w2, pw in pairs(i, 0, c - e, paired, w, power - e * a, u, a, sign, None):
                yield from a_side(i + 1, paired, w2 / factorial(rem), pw,
                                  left_a + [(u, a)] * rem)

    yield from a_side(0, [0] * nb, Fraction(1), 0, [])


def ope(g, a, b, depth=0, lowest=None):
    """Singular part of A(z)B(w), plus ``depth`` regular orders (n = 0, -1, ...).

    ``lowest`` overrides the cutoff: only pole orders n >= lowest are formed.
    """
    g = _g(g)
    rows = g.g
    theta = g.theta
    if lowest is None:
        lowest = 1 - depth
    out = {}
    for (ma, mu), ca in a.terms.items():
        gnu_cache = {}
        for (mb, nu), cb in b.terms.items():
            e = dot(rows, mu, nu)
            if e.denominator != 1:
                raise NonIntegerExponent(e)
            e = int(e)
            if nu not in gnu_cache:
                gnu_cache[nu] = tuple(sum(rows[u][v] * nu[v] for v in range(theta))
                                      for u in range(theta))
            gnu = gnu_cache[nu]
            mug = tuple(sum(mu[u] * rows[u][v] for u in range(theta)) for v in range(theta))
            total_mu = tuple(x + y for x, y in zip(mu, nu))
            for coef, power, left_a, left_b in _contractions(rows, ma, mb, gnu, mug):
                p0 = e + power
                budget = -lowest - p0
                if budget < 0:
                    continue
                ser = _taylor(tuple(sorted(left_a)), mu, budget)
                c0 = coef * ca * cb
                for n, poly in enumerate(ser):
                    order = -(p0 + n)
                    bucket = out.setdefault(order, {})
                    for m, c in poly.items():
                        key = (tuple(sorted(m + left_b)), total_mu)
                        bucket[key] = bucket.get(key, 0) + c0 * c
    res = OpeExpansion({n: Field(theta, t) for n, t in out.items()})
    res.theta = theta
    return res


def gram_inverse(g):
    g = _g(g)
    n = g.theta
    cols = []
    for i in range(n):
        try:
            cols.append(exact_solve([list(r) for r in g.g], [int(i == j) for j in range(n)]))
        except SingularMatrix:
            raise DegenerateMomenta("screening momenta are linearly dependent") from None
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def build_T(g):
    """T = 1/2 dphi.dphi + xi.d^2phi, with xi fixed by the screenings."""
    g = _g(g)
    n = g.theta
    inv = gram_inverse(g)
    x = solve_xi(g).x
    t = Field.zero(n)
    for i in range(n):
        for j in range(n):
            t = t + Field.monomial(n, [(i, 1), (j, 1)], coeff=inv[i][j] / 2)
        t = t + Field.monomial(n, [(i, 2)], coeff=x[i])
    return t


def screening_residue(g, nu, x):
    """Pole-1 coefficient of e^{nu.phi}(z) X(w)."""
    g = _g(g)
    return ope(g, Field.exp(nu), x).pole(1)


def mode_action(g, a, h_a, n, x):
    """A_n X = coefficient of (z-w)^-(n + h_a) in A(z)X(w)."""
    order = n + h_a
    return ope(g, a, x, depth=max(0, 1 - order)).pole(order)


def _combine(theta, basis, coeffs):
    out = Field.zero(theta)
    for f, c in zip(basis, coeffs):
        if c:
            out = out + f.scale(c)
    return out


def _kernel(theta, basis, images):
    """Combinations of ``basis`` whose images vanish; images[i] maps slot -> Field."""
    keys = sorted({(s, k) for im in images for s, x in im.items() for k in x.terms}, key=repr)
    index = {k: i for i, k in enumerate(keys)}
    rows = [[Fraction(0)] * len(basis) for _ in keys]
    for col, im in enumerate(images):
        for s, x in im.items():
            for k, c in x.terms.items():
                rows[index[(s, k)]][col] = c
    return [_combine(theta, basis, v) for v in nullspace(rows, len(basis))]


def centralizer_basis(g, weight, screenings=None):
    """Momentum-zero differential polynomials of the given weight killed by
    every screening residue."""
    g = _g(g)
    theta = g.theta
    gram_inverse(g)  # DegenerateMomenta check
    if screenings is None:
        screenings = [unit(theta, i) for i in range(theta)]
    basis = [Field.monomial(theta, m) for m in monomials(theta, weight)]
    images = [{i: screening_residue(g, nu, f) for i, nu in enumerate(screenings)}
              for f in basis]
    return _kernel(theta, basis, images)


def primary_conditions(g, t, x, extra=(), from_zero=False):
    """Fields that must vanish for X to be primary, keyed by (current, mode).

    Current 0 is T (modes n >= 1); extra currents (A, h_A) are numbered
    from 1 and checked for n >= 1, or n >= 0 with ``from_zero``.
    """
    out = {}
    currents = [(t, 2, False)] + [(a, h, from_zero) for a, h in extra]
    for idx, (a, h_a, zero_ok) in enumerate(currents):
        e = ope(g, a, x)
        first = 0 if zero_ok else 1
        for order in e.orders():
            n = order - h_a
            if n >= first:
                out[(idx, n)] = e[order]
    return out


def is_primary(g, x, t, extra=(), from_zero=False, weight=None):
    """L_n X = 0 (n >= 1), A_n X = 0 (n >= 1, or n >= 0), L_0 X = h X."""
    if primary_conditions(g, t, x, extra, from_zero):
        return False
    if weight is not None:
        return ope(g, t, x).pole(2) == x.scale(weight)
    return True


def total_derivative(g, r):
    """Y with dY = R, or raise NotTotalDerivative."""
    theta = r.theta
    y = Field.zero(theta)
    for mu in r.momenta():
        for deg in sorted({sum(k for _, k in m) for (m, p) in r.terms if p == mu}):
            part = r.part(degree=deg, mu=mu)
            if deg == 0:
                raise NotTotalDerivative("residue has a bare exponential term", part)
            basis = [Field.monomial(theta, m, mu) for m in monomials(theta, deg - 1)]
            ders = [f.derivative() for f in basis]
            keys = sorted({k for d in ders for k in d.terms} | set(part.terms), key=repr)
            a = [[d.terms.get(k, Fraction(0)) for d in ders] for k in keys]
            rhs = [part.terms.get(k, Fraction(0)) for k in keys]
            sol = solve_any(a, rhs)
            if sol is None:
                raise NotTotalDerivative("residue is not a total derivative", part)
            y = y + _combine(theta, basis, sol)
    return y


def is_total_derivative(g, r):
    try:
        total_derivative(g, r)
        return True
    except NotTotalDerivative:
        return False


def find_primary(g, weight, t=None, basis=None):
    """The unique (up to scale) primary in the weight-h centralizer."""
    g = _g(g)
    theta = g.theta
    t = build_T(g) if t is None else t
    basis = centralizer_basis(g, weight) if basis is None else basis
    images = [primary_conditions(g, t, f) for f in basis]
    sols = _kernel(theta, basis, images)
    if not sols:
        raise NoPrimary(f"no primary of weight {weight} in the centralizer")
    if len(sols) > 1:
        raise NotUnique(f"{len(sols)} independent primaries of weight {weight}")
    return sols[0]
