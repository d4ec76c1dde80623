"""Free-boson fields written in the basis of screening momenta.

A field is a finite sum of terms c * prod d^k phi_v * e^{mu.phi}, where
phi_v = alpha_v . phi is the boson "in the direction" of screening v and
mu is given by its coordinates over the screening momenta.  Products are
free-field normal ordered, hence commutative; for a product whose left
factor is a single d^k phi_v this agrees with right-nested ordering.
"""

from fractions import Fraction
from itertools import combinations_with_replacement

from ..exact import format_rational, parse_rational

__all__ = ["Field", "momentum", "dot", "monomials"]


def momentum(*coords):
    """Momentum coordinates over the screening basis."""
    return tuple(parse_rational(c) for c in coords)


def dot(g, mu, nu):
    """mu.nu through the Gram matrix (a GramMatrix or a nested list)."""
    rows = g.g if hasattr(g, "g") else g
    return sum((mu[i] * rows[i][j] * nu[j]
               for i in range(len(mu)) if mu[i]
               for j in range(len(nu)) if nu[j]), Fraction(0))


def _clean(terms):
    return {k: v for k, v in terms.items() if v}


class Field:
    """Sum of normal-ordered terms {(monomial, momentum): coefficient}.

    A monomial is a sorted tuple of (v, k) pairs, k >= 1, for d^k phi_v.
    """

    __slots__ = ("theta", "terms")

    def __init__(self, theta, terms=None):
        self.theta = theta
        self.terms = _clean(dict(terms or {}))

    # constructors
    @classmethod
    def one(cls, theta):
        return cls(theta, {((), (Fraction(0),) * theta): Fraction(1)})

    @classmethod
    def zero(cls, theta):
        return cls(theta)

    @classmethod
    def dphi(cls, theta, v, k=1):
        return cls(theta, {(((v, k),), (Fraction(0),) * theta): Fraction(1)})

    @classmethod
    def exp(cls, mu):
        mu = momentum(*mu)
        return cls(len(mu), {((), mu): Fraction(1)})

    @classmethod
    def monomial(cls, theta, mono, mu=None, coeff=1):
        mu = (Fraction(0),) * theta if mu is None else momentum(*mu)
        return cls(theta, {(tuple(sorted(mono)), mu): Fraction(coeff)})

    # arithmetic
    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Field(self.theta, out)

    def __neg__(self):
        return Field(self.theta, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = parse_rational(c)
        return Field(self.theta, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if not isinstance(other, Field):
            return self.scale(other)
        out = {}
        for (m1, p1), c1 in self.terms.items():
            for (m2, p2), c2 in other.terms.items():
                key = (tuple(sorted(m1 + m2)), tuple(a + b for a, b in zip(p1, p2)))
                out[key] = out.get(key, 0) + c1 * c2
        return Field(self.theta, out)

    def __eq__(self, other):
        return isinstance(other, Field) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # structure
    def derivative(self):
        out = {}
        for (mono, mu), c in self.terms.items():
            for idx, (v, k) in enumerate(mono):
                m = tuple(sorted(mono[:idx] + ((v, k + 1),) + mono[idx + 1:]))
                out[(m, mu)] = out.get((m, mu), 0) + c
            for v, mv in enumerate(mu):
                if mv:
                    m = tuple(sorted(mono + ((v, 1),)))
                    out[(m, mu)] = out.get((m, mu), 0) + c * mv
        return Field(self.theta, out)

    def momenta(self):
        return sorted({mu for _, mu in self.terms})

    def momentum(self):
        """The single momentum of a homogeneous field (zero field: None)."""
        ms = self.momenta()
        if len(ms) > 1:
            raise ValueError("field mixes several momenta")
        return ms[0] if ms else None

    def degrees(self):
        """Set of derivative counts (sum of k) over terms."""
        return sorted({sum(k for _, k in mono) for mono, _ in self.terms})

    def order(self):
        """Derivative count of the prefactor polynomial (max over terms)."""
        return max(self.degrees(), default=0)

    def part(self, degree=None, mu=None):
        return Field(self.theta, {(m, p): c for (m, p), c in self.terms.items()
                                  if (degree is None or sum(k for _, k in m) == degree)
                                  and (mu is None or p == mu)})

    def coefficient(self, mono, mu=None):
        mu = (Fraction(0),) * self.theta if mu is None else momentum(*mu)
        return self.terms.get((tuple(sorted(mono)), mu), Fraction(0))

    def weight_of(self, g, x):
        """Conformal weights of the terms w.r.t. T with xi = sum x_j alpha_j."""
        out = set()
        for mono, mu in self.terms:
            h = sum(k for _, k in mono) + dot(g, mu, mu) / 2 - dot(g, x, mu)
            out.add(h)
        return sorted(out)

    def leading(self):
        """Coefficient of the lexicographically first term (for normalizing)."""
        if not self.terms:
            return Fraction(0)
        return self.terms[min(self.terms, key=_term_key)]

    def ratio_to(self, other):
        """c with self = c * other, or None if not proportional."""
        if not other:
            return Fraction(0) if not self else None
        if set(self.terms) != set(other.terms):
            return None
        k = next(iter(other.terms))
        c = self.terms[k] / other.terms[k]
        if all(self.terms[t] == c * other.terms[t] for t in other.terms):
            return c
        return None

    # output
    def to_json(self, names=None):
        names = names or _default_names(self.theta)
        return [{"coeff": format_rational(c),
                 "factors": [_factor_text(names, v, k) for v, k in mono],
                 "momentum": [format_rational(x) for x in mu]}
                for (mono, mu), c in sorted(self.terms.items(), key=lambda t: _term_key(t[0]))]

    def text(self, names=None):
        names = names or _default_names(self.theta)
        if not self.terms:
            return "0"
        parts = []
        for (mono, mu), c in sorted(self.terms.items(), key=lambda t: _term_key(t[0])):
            f = [_factor_text(names, v, k) for v, k in mono]
            if any(mu):
                f.append("e^(" + ",".join(format_rational(x) for x in mu) + ")")
            parts.append(format_rational(c) + ("*" + "*".join(f) if f else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"Field({self.text()})"


def _term_key(key):
    mono, mu = key
    # higher powers of first-order factors first, as in the usual displays
    return (sorted((k, v) for v, k in mono), tuple(mu))


def _default_names(theta):
    return ["a", "b"] if theta == 2 else [str(i + 1) for i in range(theta)]


def _factor_text(names, v, k):
    return f"d{k}phi_{names[v]}" if k > 1 else f"dphi_{names[v]}"


def _partitions(n, maxpart=None):
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def monomials(theta, degree):
    """All monomials of derivative count ``degree`` in theta bosons."""
    out = set()
    for part in _partitions(degree):
        # distribute each part size over the theta directions
        groups = [[]]
        for k in sorted(set(part)):
            mult = part.count(k)
            new = []
            for combo in combinations_with_replacement(range(theta), mult):
                for g in groups:
                    new.append(g + [(v, k) for v in combo])
            groups = new
        for g in groups:
            out.add(tuple(sorted(g)))
    return sorted(out, key=lambda m: sorted((k, v) for v, k in m))
