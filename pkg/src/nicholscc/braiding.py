"""Diagonal braiding matrices and the Weyl groupoid action on them.

Indices are 0-based throughout the Python API (the CLI is 1-based, like
the usual node labels 1..theta).
"""

import json
from collections import deque
from dataclasses import dataclass

from .errors import NotAdmissible, OrbitBound
from .exact import RationalAngle, lcm

__all__ = [
    "BraidingMatrix", "generalized_cartan", "cartan_branches", "reflect",
    "weyl_orbit", "twist_equivalent", "DynkinDiagram", "OrbitClass",
]


@dataclass(frozen=True)
class BraidingMatrix:
    q: tuple  # theta x theta tuple of RationalAngle

    def __post_init__(self):
        q = tuple(tuple(x if isinstance(x, RationalAngle) else RationalAngle.parse(x)
                        for x in row) for row in self.q)
        if any(len(row) != len(q) for row in q):
            raise ValueError("braiding matrix must be square")
        object.__setattr__(self, "q", q)

    @property
    def theta(self):
        return len(self.q)

    def __getitem__(self, ij):
        i, j = ij
        return self.q[i][j]

    @classmethod
    def from_diagram(cls, diagonal, monodromies):
        """Twist representative: q_ij = m_ij for i < j, q_ji = 1.

        ``monodromies`` maps (i, j) with i < j to an angle; missing pairs are 1.
        """
        theta = len(diagonal)
        q = [[RationalAngle(0)] * theta for _ in range(theta)]
        for i, d in enumerate(diagonal):
            q[i][i] = _angle(d)
        for (i, j), m in monodromies.items():
            if i > j:
                i, j = j, i
            q[i][j] = _angle(m)
        return cls(tuple(map(tuple, q)))

    @classmethod
    def rank2(cls, q11, q22, monodromy):
        return cls.from_diagram([q11, q22], {(0, 1): monodromy})

    def diagonal(self):
        return tuple(self.q[i][i] for i in range(self.theta))

    def monodromy(self, i, j):
        return self.q[i][j] * self.q[j][i]

    def monodromies(self):
        return {(i, j): self.monodromy(i, j)
                for i in range(self.theta) for j in range(i + 1, self.theta)}

    def twist_key(self):
        return (self.diagonal(), tuple(sorted(self.monodromies().items())))

    def conductor(self):
        return lcm(*(x.order for row in self.q for x in row))

    def to_json(self):
        return {"theta": self.theta, "q": [[str(x) for x in row] for row in self.q]}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        q = tuple(tuple(RationalAngle.parse(x) for x in row) for row in data["q"])
        if "theta" in data and int(data["theta"]) != len(q):
            raise ValueError("theta does not match matrix size")
        return cls(q)

    def __str__(self):
        return json.dumps(self.to_json())


def _angle(x):
    return x if isinstance(x, RationalAngle) else RationalAngle.parse(x)


def generalized_cartan(b):
    """Generalized Cartan matrix by the minimal-witness rule.

    a_ij = -min{n >= 0 : q_ii^-n = q_ij q_ji  or  q_ii^(n+1) = 1}.
    Several matrices can satisfy the defining test; the minimal one is our
    convention.
    """
    theta = b.theta
    bound = b.conductor() + 1
    a = [[0] * theta for _ in range(theta)]
    for i in range(theta):
        a[i][i] = 2
        qii = b[i, i]
        for j in range(theta):
            if i == j:
                continue
            m = b.monodromy(i, j)
            for n in range(bound + 1):
                if (qii ** -n) == m or (qii ** (n + 1)).is_one():
                    a[i][j] = -n
                    break
            else:
                raise NotAdmissible(i, j)
    return tuple(map(tuple, a))


def cartan_branches(b, a):
    """For each ordered pair i != j, which side of the Cartan test holds."""
    out = {}
    for i in range(b.theta):
        for j in range(b.theta):
            if i == j:
                continue
            first = (b[i, i] ** a[i][j]) == b.monodromy(i, j)
            second = (b[i, i] ** (1 - a[i][j])).is_one()
            out[(i, j)] = _branch_name(first, second)
    return out


def _branch_name(first, second):
    if first and second:
        return "both"
    if first:
        return "first"
    if second:
        return "second"
    return "neither"


def reflect(b, k, a=None):
    """Reflected braiding matrix at node k."""
    if a is None:
        a = generalized_cartan(b)
    theta = b.theta
    q = [[None] * theta for _ in range(theta)]
    for i in range(theta):
        for j in range(theta):
            t = (b[i, j].t - a[k][j] * b[i, k].t - a[k][i] * b[k, j].t
                 + a[k][i] * a[k][j] * b[k, k].t)
            q[i][j] = RationalAngle(t)
    return BraidingMatrix(tuple(map(tuple, q)))


def twist_equivalent(b1, b2):
    if b1.theta != b2.theta:
        raise ValueError("braidings of different rank")
    return b1.twist_key() == b2.twist_key()


@dataclass(frozen=True)
class OrbitClass:
    braiding: BraidingMatrix
    cartan: tuple

    def to_json(self):
        return {"braiding": self.braiding.to_json(),
                "dynkin": DynkinDiagram.of(self.braiding).text(),
                "cartan": [list(r) for r in self.cartan]}


def weyl_orbit(b, cap=64):
    """Twist classes reachable from b by reflections, in BFS order."""
    seen = {b.twist_key(): OrbitClass(b, generalized_cartan(b))}
    queue = deque([b.twist_key()])
    while queue:
        cls = seen[queue.popleft()]
        for k in range(b.theta):
            r = reflect(cls.braiding, k, cls.cartan)
            key = r.twist_key()
            if key not in seen:
                if len(seen) >= cap:
                    raise OrbitBound(f"Weyl orbit exceeds {cap} classes")
                seen[key] = OrbitClass(r, generalized_cartan(r))
                queue.append(key)
    return list(seen.values())


@dataclass(frozen=True)
class DynkinDiagram:
    vertices: tuple
    edges: tuple  # ((i, j), angle) with i < j and nontrivial monodromy

    @classmethod
    def of(cls, b):
        edges = tuple(((i, j), m) for (i, j), m in sorted(b.monodromies().items())
                      if not m.is_one())
        return cls(b.diagonal(), edges)

    def text(self):
        if len(self.vertices) == 2:
            m = dict(self.edges).get((0, 1))
            link = f" --{m}-- " if m is not None else "    "
            return f"{self.vertices[0]}{link}{self.vertices[1]}"
        parts = [f"v{i + 1}={v}" for i, v in enumerate(self.vertices)]
        parts += [f"{i + 1}-{j + 1}:{m}" for (i, j), m in self.edges]
        return " ".join(parts)
