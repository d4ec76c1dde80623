"""Nichols algebras of diagonal type at desk scale.

dim B_d is the rank of the braided symmetrizer S_n on the span of words of
multidegree d.  We use the factorisation

    S_n = (S_{n-1} (x) 1) o sum_k  c_{n-1} ... c_k,

where the k-th term moves the letter at position k to the end, picking up
prod_{l > k} q(w_k, w_l).  Row w of S_n is then assembled from rows of
S_{n-1} on the words w with one letter removed.  Only a column basis of
each component's row space is kept, so matrices stay as narrow as the
graded dimensions themselves.

Entries are kept in the group ring Z[Z/N] (integer vectors of length N,
the conductor) and reduced to Q(zeta_N) only for rank decisions.

Words are tuples over 0..theta-1 internally; bracket strings use 1-based
letters, as in "[1,1,2]" or "[1,2]^3".
"""

import ast
import os
import re
from dataclasses import dataclass
from itertools import permutations
from math import factorial

from .errors import DegreeCapExceeded
from .exact import CyclotomicNumber

__all__ = [
    "BraidedSpace", "Unbounded", "TensorElement", "words", "symmetrizer_rank",
    "shuffle_rank", "hilbert_series", "multidegree_series", "nichols_dimension",
    "q_commutator", "parse_element", "vanishes_in_nichols", "bracket_nestings",
    "lyndon_bracketing", "nest", "brute_symmetrizer", "is_palindromic", "spec_text",
]

DEGREE_CAP = int(os.environ.get("NICHOLS_CC_DEGREE_CAP", 12))
COMPONENT_CAP = int(os.environ.get("NICHOLS_CC_COMPONENT_CAP", 4000))


@dataclass(frozen=True)
class Unbounded:
    cap: int

    def __str__(self):
        return f"Unbounded({self.cap})"


def _multinomial(d):
    out = factorial(sum(d))
    for x in d:
        out //= factorial(x)
    return out


def words(d):
    """All words of multidegree d, in lexicographic order."""
    d = tuple(d)
    out = []

    def rec(rem, acc):
        if not any(rem):
            out.append(tuple(acc))
            return
        for i, x in enumerate(rem):
            if x:
                acc.append(i)
                rec(rem[:i] + (x - 1,) + rem[i + 1:], acc)
                acc.pop()
    rec(d, [])
    return out


def _compositions(n, theta):
    if theta == 1:
        yield (n,)
        return
    for a in range(n, -1, -1):
        for rest in _compositions(n - a, theta - 1):
            yield (a,) + rest


# -- group ring helpers --------------------------------------------------------

def _gr_zero(n):
    return [0] * n


def _gr_add_shift(acc, v, shift, n):
    for k, a in enumerate(v):
        if a:
            acc[(k + shift) % n] += a


def _to_cyc(n, v):
    return CyclotomicNumber.from_group_ring(n, v)


def _field_pivots(rows):
    """Rank and pivot columns of a matrix over a field (Gaussian elimination)."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0, []
    ncols = len(rows[0])
    piv = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        for i in range(r, len(rows)):
            if rows[i][c]:
                break
        else:
            continue
        rows[r], rows[i] = rows[i], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                f = f * inv
                row = rows[i]
                for j in range(c + 1, ncols):
                    if prow[j]:
                        row[j] = row[j] - f * prow[j]
                row[c] = 0
        piv.append(c)
        r += 1
    return r, piv


class BraidedSpace:
    """Braided vector space with diagonal braiding c(x_i (x) x_j) = q_ij x_j (x) x_i."""

    def __init__(self, braiding, degree_cap=None, component_cap=None):
        self.braiding = braiding
        self.theta = braiding.theta
        self.n = braiding.conductor()
        self.e = [[int(braiding[i, j].t * self.n) for j in range(self.theta)]
                  for i in range(self.theta)]
        self.degree_cap = DEGREE_CAP if degree_cap is None else degree_cap
        self.component_cap = COMPONENT_CAP if component_cap is None else component_cap
        # multidegree -> (words, index, rows); rows[w] = group-ring vectors
        # on a column basis of the row space of S_n restricted to d
        self._comp = {}

    def _check(self, d):
        if sum(d) > self.degree_cap:
            raise DegreeCapExceeded(f"degree {sum(d)} exceeds cap {self.degree_cap}")
        if _multinomial(d) > self.component_cap:
            raise DegreeCapExceeded(
                f"component {d} has {_multinomial(d)} words, cap {self.component_cap}")

    def q_exp(self, a, b):
        return self.e[a][b]

    def component(self, d):
        d = tuple(d)
        if d in self._comp:
            return self._comp[d]
        self._check(d)
        n, theta = self.n, self.theta
        if sum(d) == 0:
            one = _gr_zero(n)
            one[0] = 1
            res = ([()], {(): 0}, [[one]])
            self._comp[d] = res
            return res
        # column blocks: one per last letter i with a nonzero lower component
        blocks = []
        for i in range(theta):
            if d[i]:
                sub = d[:i] + (d[i] - 1,) + d[i + 1:]
                sw, sidx, srows = self.component(sub)
                width = len(srows[0]) if srows else 0
                if width:
                    blocks.append((i, sidx, srows, width))
        ws = words(d)
        index = {w: k for k, w in enumerate(ws)}
        if not blocks:
            res = (ws, index, [[] for _ in ws])
            self._comp[d] = res
            return res
        full = []
        e = self.e
        for w in ws:
            row = []
            for i, sidx, srows, width in blocks:
                acc = [_gr_zero(n) for _ in range(width)]
                for k, a in enumerate(w):
                    if a != i:
                        continue
                    shift = sum(e[a][b] for b in w[k + 1:]) % n
                    src = srows[sidx[w[:k] + w[k + 1:]]]
                    for col in range(width):
                        _gr_add_shift(acc[col], src[col], shift, n)
                row.extend(acc)
            full.append(row)
        cyc = [[_to_cyc(n, v) for v in row] for row in full]
        _, piv = _field_pivots(cyc)
        rows = [[row[c] for c in piv] for row in full]
        res = (ws, index, rows)
        self._comp[d] = res
        return res

    def dim(self, d):
        ws, index, rows = self.component(d)
        return len(rows[0]) if rows else 0

    def row_cyclotomic(self, d, w):
        ws, index, rows = self.component(d)
        return [_to_cyc(self.n, v) for v in rows[index[tuple(w)]]]


def _space(v):
    return v if isinstance(v, BraidedSpace) else BraidedSpace(v)


def symmetrizer_rank(v, d):
    return _space(v).dim(tuple(d))


def _shuffle_expand(v, w, memo):
    """x_{w1} * ... * x_{wn} as {word: group-ring vector}."""
    if w in memo:
        return memo[w]
    n = v.n
    if len(w) == 0:
        one = _gr_zero(n)
        one[0] = 1
        res = {(): one}
    else:
        left = _shuffle_expand(v, w[:-1], memo)
        b = w[-1]
        res = {}
        for u, coef in left.items():
            # insert b at position k: it passes u[k:], picking up q(b, u_l)
            shift = 0
            for k in range(len(u), -1, -1):
                if k < len(u):
                    shift = (shift + v.e[b][u[k]]) % n
                word = u[:k] + (b,) + u[k:]
                acc = res.get(word)
                if acc is None:
                    acc = res[word] = _gr_zero(n)
                _gr_add_shift(acc, coef, shift, n)
    memo[w] = res
    return res


def shuffle_rank(v, d):
    """Rank of the iterated quantum shuffle products over the words of d."""
    v = _space(v)
    d = tuple(d)
    v._check(d)
    ws = words(d)
    memo = {}
    mat = []
    for w in ws:
        e = _shuffle_expand(v, w, memo)
        mat.append([_to_cyc(v.n, e[u]) if u in e else CyclotomicNumber(v.n, [0]) for u in ws])
    r, _ = _field_pivots(mat)
    return r


def brute_symmetrizer(v, d):
    """S_n on words of d by summing over all permutations (small n only)."""
    v = _space(v)
    ws = words(d)
    idx = {w: k for k, w in enumerate(ws)}
    n = sum(d)
    mat = []
    for w in ws:
        acc = [_gr_zero(v.n) for _ in ws]
        for perm in permutations(range(n)):
            # perm lists the original positions in their new order
            shift = 0
            for a in range(n):
                for b in range(a + 1, n):
                    if perm[a] > perm[b]:
                        shift += v.e[w[perm[b]]][w[perm[a]]]
            target = tuple(w[p] for p in perm)
            acc[idx[target]][shift % v.n] += 1
        mat.append([_to_cyc(v.n, x) for x in acc])
    return mat


def multidegree_series(v, cap=None):
    """{multidegree: dim} for every total degree up to the first zero degree."""
    v = _space(v)
    cap = v.degree_cap if cap is None else cap
    out = {}
    for n in range(cap + 1):
        total = 0
        for d in _compositions(n, v.theta):
            k = v.dim(d)
            out[d] = k
            total += k
        if total == 0:
            break
    return out


def hilbert_series(v, cap=None):
    """Graded dimensions by total degree, stopping after the first zero."""
    v = _space(v)
    cap = v.degree_cap if cap is None else cap
    dims = []
    for n in range(cap + 1):
        dims.append(sum(v.dim(d) for d in _compositions(n, v.theta)))
        if dims[-1] == 0:
            break
    return dims


def nichols_dimension(v, cap=None):
    """Total dimension, or Unbounded(cap) when no zero degree appears."""
    v = _space(v)
    cap = v.degree_cap if cap is None else cap
    dims = hilbert_series(v, cap)
    if dims[-1] == 0:
        return sum(dims)
    return Unbounded(cap)


def is_palindromic(dims):
    while dims and dims[-1] == 0:
        dims = dims[:-1]
    return dims == dims[::-1]


# -- tensor elements and brackets ------------------------------------------------

class TensorElement:
    """Homogeneous element of T(X): {word: CyclotomicNumber}."""

    def __init__(self, n, theta, terms=None):
        self.n, self.theta = n, theta
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def letter(cls, n, theta, i):
        return cls(n, theta, {(i,): CyclotomicNumber(n, [1])})

    @property
    def multidegree(self):
        for w in self.terms:
            return tuple(w.count(i) for i in range(self.theta))
        return None

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return TensorElement(self.n, self.theta, out)

    def scale(self, c):
        return TensorElement(self.n, self.theta, {w: x * c for w, x in self.terms.items()})

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        out = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                out[w] = out[w] + a * b if w in out else a * b
        return TensorElement(self.n, self.theta, out)

    def power(self, k):
        out = TensorElement(self.n, self.theta, {(): CyclotomicNumber(self.n, [1])})
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            word = "".join(str(i + 1) for i in w)
            parts.append(f"({self.terms[w]!r})*{word}")
        return " + ".join(parts)


def _bichar(v, dx, dy):
    """Exponent of q(x, y) = prod q_ij^{dx_i dy_j}."""
    return sum(v.e[i][j] * dx[i] * dy[j] for i in range(v.theta) for j in range(v.theta)) % v.n


def commutator(v, x, y):
    """[x, y] = x y - q(x, y) y x."""
    c = CyclotomicNumber.root(v.n, _bichar(v, x.multidegree, y.multidegree))
    return x * y - (y * x).scale(c)


def is_lyndon(w):
    w = tuple(w)
    return bool(w) and all(w < w[k:] + w[:k] for k in range(1, len(w)))


def lyndon_bracketing(w):
    """Standard bracketing: w = u v with v the longest proper Lyndon suffix."""
    w = list(w)
    if len(w) == 1:
        return w[0]
    for k in range(1, len(w)):
        if is_lyndon(w[k:]):
            return [lyndon_bracketing(w[:k]), lyndon_bracketing(w[k:])]
    raise ValueError("word has no proper Lyndon suffix")


def nest(spec):
    """Resolve a flat letter list into a binary bracketing.

    Lyndon words get their standard bracketing, so [1,1,2] = [1,[1,2]] and
    [1,2,2] = [[1,2],2]; any other list nests to the right.
    """
    if isinstance(spec, int):
        return spec
    spec = list(spec)
    if len(spec) == 1:
        return nest(spec[0])
    if len(spec) > 2 and all(isinstance(x, int) for x in spec) and is_lyndon(spec):
        return lyndon_bracketing(spec)
    if len(spec) == 2:
        return [nest(spec[0]), nest(spec[1])]
    return [nest(spec[0]), nest(spec[1:])]


def _build(v, spec):
    spec = nest(spec)
    if isinstance(spec, int):
        return TensorElement.letter(v.n, v.theta, spec - 1)
    return commutator(v, _build(v, spec[0]), _build(v, spec[1]))


def parse_element(v, text):
    """Parse "[1,1,2]", "[[1,[1,2]],[1,2]]", "1^3", "[1,2]^p" (p substituted) etc."""
    v = _space(v)
    text = text.replace(" ", "")
    text = re.sub(r"F_?(\d)", r"\1", text)
    m = re.fullmatch(r"(.*)\^(\d+)", text)
    exp = 1
    if m:
        text, exp = m.group(1), int(m.group(2))
    spec = ast.literal_eval(text)
    return _build(v, spec).power(exp)


def q_commutator(v, spec):
    v = _space(v)
    if isinstance(spec, str):
        return parse_element(v, spec)
    return _build(v, spec)


def vanishes_in_nichols(v, e):
    """True iff e lies in the kernel of the symmetrizer on its component."""
    v = _space(v)
    if isinstance(e, str):
        e = parse_element(v, e)
    if not e:
        return True
    d = e.multidegree
    ws, index, rows = v.component(d)
    width = len(rows[0]) if rows else 0
    total = [CyclotomicNumber(v.n, [0]) for _ in range(width)]
    for w, c in e.terms.items():
        c = c.embed(v.n) if c.n != v.n else c
        row = rows[index[w]]
        for k in range(width):
            if row[k] and any(row[k]):
                total[k] = total[k] + c * _to_cyc(v.n, row[k])
    return not any(total)


def bracket_nestings(letters):
    """All full binary bracketings of a word, as nested lists."""
    letters = list(letters)
    if len(letters) == 1:
        return [letters[0]]
    out = []
    for k in range(1, len(letters)):
        for left in bracket_nestings(letters[:k]):
            for right in bracket_nestings(letters[k:]):
                out.append([left, right])
    return out


def spec_text(spec):
    if isinstance(spec, int):
        return str(spec)
    return "[" + ",".join(spec_text(s) for s in spec) + "]"
