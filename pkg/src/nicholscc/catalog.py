"""Rank-2 finite-dimensional Nichols algebras of diagonal type, as data.

Each item carries its defining conditions on the braiding matrix, the lift
of those conditions to the scalar products a = alpha.alpha, b = beta.beta,
d = alpha.beta ("honest" logarithms with integer parameters), the recorded
regular and peculiar solutions with their central charges, and, where
known, a presentation of the Nichols algebra.

Angles are handled as t in Q/Z (q = e^{2 pi i t}).  A braiding matrix is
summarised by (t11, t22, tm) with tm the angle of the monodromy q12 q21.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction as F
from math import gcd
from typing import Callable, Optional

from .errors import NoChargeRecorded, NoPresentation, OutOfDomain, UnknownItem
from .exact import RationalAngle, format_rational

__all__ = [
    "ItemSpec", "Family", "Presentation", "get_item", "item_ids", "match_braiding",
    "expected_charge", "expected_dimension", "enumerate_item", "catalog_json",
    "angles_of",
]

HALF = F(1, 2)


def _frac(x):
    return x % 1


def _order(t):
    return F(t).denominator if _frac(t) else 1


def _in_r(t, *orders):
    return _order(t) in orders


def angles_of(b):
    """(t11, t22, tm) of a rank-2 braiding matrix."""
    return b[0, 0].t, b[1, 1].t, b.monodromy(0, 1).t


def _eq(x, y):
    return _frac(x - y) == 0


# -- central charge closed forms --------------------------------------------

def w3_charge(K):
    return 50 - 24 / K - 24 * K


def coset_charge(k):
    return 3 * k / (k + 2) - 1


def wb2_charge(K):
    return 86 - 60 * K - 30 / K


def wg2_charge(K):
    return 194 - 168 * K - 56 / K


def c23_charge(z):
    return F(-21, 2) - 6 * z - F(27) / (2 * (4 * z - 3))


def w3_2_charge(k):
    return -25 + F(24) / (k + 3) + 6 * (k + 3)


def boson_charge(a):
    return 1 - 3 * (a - 2) ** 2 / a


# -- data types ---------------------------------------------------------------

@dataclass
class Family:
    label: str
    cls: str                       # "regular" or "peculiar"
    text: str                      # constraints as printed
    match: Callable                # full parameter dict -> bool
    charge: Callable               # parameter dict -> Fraction
    charge_text: str = ""
    alt: Optional[Callable] = None  # alternate parameter map, must agree
    needs: tuple = ()              # parameters the charge evaluator reads

    def to_json(self):
        return {"label": self.label, "class": self.cls, "constraints": self.text,
                "charge": self.charge_text, "alternate_map": self.alt is not None}


@dataclass
class Presentation:
    generators: Callable           # params -> list of generator strings
    dimension: Callable            # params -> int
    domain: Callable               # params -> bool
    domain_text: str
    dimension_text: str
    braiding: Callable             # params -> (t11, t22, tm)
    notes: str = ""

    def to_json(self):
        return {"dimension": self.dimension_text, "domain": self.domain_text,
                "notes": self.notes}


@dataclass
class ItemSpec:
    id: str
    conditions: str
    predicate: Callable            # (t11, t22, tm) -> bool
    cartan_type: str = ""
    dynkin: str = ""
    params: tuple = ()             # ((name, kind, extra), ...)
    gram: Optional[Callable] = None    # params -> (a, b, d)
    template: Optional[Callable] = None  # params -> (t11, t22, tm) as printed
    gram_text: str = ""
    families: list = field(default_factory=list)
    presentation: Optional[Presentation] = None
    notes: str = ""
    roots: Optional[Callable] = None   # generic items: yields (t11, t22, tm)

    @property
    def conditions_only(self):
        return not self.families

    def gram_matrix(self, params):
        from .charge import GramMatrix
        a, b, d = self.gram(params)
        return GramMatrix.rank2(a, b, d)

    def matches(self, b):
        return self.predicate(*angles_of(b))

    def to_json(self):
        out = {
            "id": self.id, "conditions": self.conditions, "cartan_type": self.cartan_type,
            "dynkin": self.dynkin, "conditions_only": self.conditions_only,
            "params": [p[0] for p in self.params], "gram_family": self.gram_text,
            "known_solutions": [f.to_json() for f in self.families],
            "notes": self.notes,
        }
        if self.presentation is not None:
            out["presentation"] = self.presentation.to_json()
        return out


# -- defining conditions --------------------------------------------------------

def _c1(t11, t22, tm):
    return _eq(tm, 0) and not _eq(t11, 0) and not _eq(t22, 0)


def _c2(t11, t22, tm):
    return _eq(tm + t22, 0) and not _eq(tm, 0)


def _c3_head(t11, t22, tm):
    return (not _eq(tm, 0) and not _eq(t11 + tm, 0) and not _eq(tm + t22, 0)
            and _eq(t22, HALF))


def _c3(t11, t22, tm):
    return _c3_head(t11, t22, tm) and _in_r(t11, 2, 3)


def _c4(t11, t22, tm):
    return _c3_head(t11, t22, tm) and not _in_r(t11, 2, 3)


def _c5(t11, t22, tm):
    return (not _eq(tm, 0) and not _eq(t11 + tm, 0) and not _eq(tm + t22, 0)
            and not _eq(t11, HALF) and _in_r(t22, 3))


def _and(*preds):
    return lambda *t: all(p(*t) for p in preds)


PREDICATES = {
    "1": _c1,
    "2.1": _and(_c2, lambda t11, t22, tm: _eq(t11 + tm, 0) and _order(tm) >= 2),
    "2.2": _and(_c2, lambda t11, t22, tm: _eq(t11, HALF) and _order(tm) >= 3),
    "2.3": _and(_c2, lambda t11, t22, tm: _in_r(t11, 3) and _order(tm) >= 2
                and not _eq(t11 + tm, 0)),
    "2.4.1": _and(_c2, lambda t11, t22, tm: _order(t11) >= 4 and _eq(tm, -2 * t11)),
    "2.4.2": _and(_c2, lambda t11, t22, tm: _order(t11) >= 4 and _eq(tm, -3 * t11)),
    "2.5": _and(_c2, lambda t11, t22, tm: _in_r(tm, 8) and _eq(t11, 2 * tm)),
    "2.6": _and(_c2, lambda t11, t22, tm: _in_r(tm, 24) and _eq(t11, 6 * tm)),
    "2.7": _and(_c2, lambda t11, t22, tm: _in_r(tm, 30) and _eq(t11, 12 * tm)),
    "3.1": _and(_c3, lambda t11, t22, tm: _eq(t11, HALF) and _order(tm) >= 3),
    "3.2.1": _and(_c3, lambda t11, t22, tm: _in_r(t11, 3) and _eq(tm, t11)),
    "3.2.2": _and(_c3, lambda t11, t22, tm: _in_r(t11, 3) and _eq(tm, t11 + HALF)),
    "3.3": _and(_c3, lambda t11, t22, tm: _in_r(t11 + tm, 12) and _eq(t11, 4 * (t11 + tm))),
    "3.4": _and(_c3, lambda t11, t22, tm: _in_r(tm, 12) and _eq(t11, HALF + 2 * tm)),
    "3.5": _and(_c3, lambda t11, t22, tm: _in_r(tm, 9) and _eq(t11, -3 * tm)),
    "3.6": _and(_c3, lambda t11, t22, tm: _in_r(tm, 24) and _eq(t11, HALF + 4 * tm)),
    "3.7": _and(_c3, lambda t11, t22, tm: _in_r(tm, 30) and _eq(t11, HALF + 5 * tm)),
    "4.1": _and(_c4, lambda t11, t22, tm: _order(t11) >= 5 and _eq(tm, -2 * t11)),
    "4.2": _and(_c4, lambda t11, t22, tm: _in_r(t11, 5, 8, 12, 14, 20) and _eq(tm, -3 * t11)),
    "4.3": _and(_c4, lambda t11, t22, tm: _in_r(t11, 10, 18) and _eq(tm, -4 * t11)),
    "4.4": _and(_c4, lambda t11, t22, tm: _in_r(t11, 14, 24) and _eq(tm, -5 * t11)),
    "4.5": _and(_c4, lambda t11, t22, tm: _in_r(tm, 8) and _eq(t11, -2 * tm)),
    "4.6": _and(_c4, lambda t11, t22, tm: _in_r(tm, 12) and _eq(t11, -3 * tm)),
    "4.7": _and(_c4, lambda t11, t22, tm: _in_r(tm, 20) and _eq(t11, -4 * tm)),
    "4.8": _and(_c4, lambda t11, t22, tm: _in_r(tm, 30) and _eq(t11, -6 * tm)),
    "5.1": _and(_c5, lambda t11, t22, tm: _in_r(t11 + tm, 12)
                and _eq(t11, 4 * (t11 + tm)) and _eq(t22, HALF + 2 * (t11 + tm))),
    "5.2": _and(_c5, lambda t11, t22, tm: _in_r(tm, 12) and _eq(t11, HALF + 2 * tm)
                and _eq(t22, t11)),
    "5.3": _and(_c5, lambda t11, t22, tm: _in_r(tm, 24) and _eq(t11, -6 * tm)
                and _eq(t22, -8 * tm)),
    "5.4": _and(_c5, lambda t11, t22, tm: _in_r(t11, 18) and _eq(tm, -2 * t11)
                and _eq(t22, HALF + 3 * t11)),
    "5.5": _and(_c5, lambda t11, t22, tm: _in_r(t11, 30) and _eq(tm, -3 * t11)
                and _eq(t22, HALF + 5 * t11)),
}


# -- helpers for item construction --------------------------------------------

def _units(n):
    return [r for r in range(1, n) if gcd(r, n) == 1] if n > 1 else [0]


def _gen_roots(orders, rel):
    """Angle triples from a generator root of the given orders."""
    def roots():
        for n in orders:
            for r in _units(n):
                yield rel(F(r, n))
    return roots


def _ord_of(t):
    return _order(t)


def _p_root(p):
    return F(1, p)


def _pp_23(p):
    # p' = ord(q11 q22^-1) at q11 = e^{2 pi i/3}, q22 = e^{2 pi i/p}
    return _order(F(1, 3) - F(1, p))


def _pp_41(p):
    return _order(HALF + F(1, p))


def _reg(label="regular m=n=0"):
    return label


ITEMS = {}


def _item(spec):
    spec.predicate = PREDICATES[spec.id]
    ITEMS[spec.id] = spec
    return spec


INT, ORDER, RES = "int", "order", "res"


# item 1 ---------------------------------------------------------------------
_item(ItemSpec(
    "1", "q12 q21 = 1, q11, q22 in R_a (a >= 2)", None,
    cartan_type="A1 x A1", dynkin="q11    q22",
    params=(("p1", ORDER, None), ("p2", ORDER, None), ("n1", INT, None),
            ("n2", INT, None), ("j", INT, None)),
    gram=lambda P: (F(2, P["p1"]) + 2 * P["n1"], F(2, P["p2"]) + 2 * P["n2"], F(P["j"])),
    template=lambda P: (F(1, P["p1"]), F(1, P["p2"]), F(0)),
    gram_text="a = 2/p1 + 2 n1, b = 2/p2 + 2 n2, d = j",
    families=[
        Family("regular j=n1=n2=0", "regular", "j = 0, n1 = n2 = 0",
               lambda P: P["j"] == 0 and P["n1"] == 0 and P["n2"] == 0,
               lambda P: sum(13 - 6 * F(p) - 6 / F(p) for p in (P["p1"], P["p2"])),
               "sum over i of 13 - 6 p_i - 6/p_i", needs=("p1", "p2")),
    ],
    notes="product of two (p,1) models; the collinear (p',p) case is a theta=1 Gram",
))

# items 2.* ------------------------------------------------------------------
_COMMON2 = "2 alpha.beta + beta.beta = 2m"


def _pecul_21(label, pfix, rel_mn, jshift):
    """Peculiar solutions of item 2.1 with half-integer k (see notes)."""
    return label, pfix, rel_mn, jshift


_21_PECULIAR = [
    # (text, p, match(m, n, j), k(m, n, j))
    ("m=0, n=-k-3/2, p=2, j=-k-3/2", 2, lambda m, n, j: m == 0 and j == n,
     lambda m, n, j: -n - F(3, 2)),
    ("m=0, n=-k-3/2, p=-2, j=-k-5/2", -2, lambda m, n, j: m == 0 and j == n - 1,
     lambda m, n, j: -n - F(3, 2)),
    ("m=-k-3/2, n=0, p=2, j=-k-3/2", 2, lambda m, n, j: n == 0 and j == m,
     lambda m, n, j: -m - F(3, 2)),
    ("m=-k-3/2, n=0, p=-2, j=-k-5/2", -2, lambda m, n, j: n == 0 and j == m - 1,
     lambda m, n, j: -m - F(3, 2)),
    ("m=n=k+3/2, p=2, j=k+3/2", 2, lambda m, n, j: m == n == j,
     lambda m, n, j: n - F(3, 2)),
    ("m=n=k+3/2, p=-2, j=k+1/2", -2, lambda m, n, j: m == n == j + 1,
     lambda m, n, j: n - F(3, 2)),
]


def _fam21(i, text, pfix, rel, kof):
    def match(P):
        return P["p"] == pfix and rel(P["m"], P["n"], P["j"])

    def charge(P):
        k = F(P["k"]) if "k" in P else kof(P["m"], P["n"], P["j"])
        return coset_charge(k)
    return Family(f"peculiar {i + 1}", "peculiar", text + " (k half-integer)", match, charge,
                  "3k/(k+2) - 1", needs=("k",))


def _dim21(P):
    return P["p"] ** 3


_item(ItemSpec(
    "2.1", "q12 q21 q22 = 1, q11 q12 q21 = 1, q12 q21 in R_a (a >= 2)", None,
    cartan_type="A2", dynkin="q --q^-1-- q",
    params=(("p", ORDER, None), ("m", INT, None), ("n", INT, None), ("j", INT, None)),
    gram=lambda P: ((lambda d: (2 * P["n"] - 2 * d, 2 * P["m"] - 2 * d, d))(-F(1, P["p"]) + P["j"])),
    template=lambda P: (F(1, P["p"]), F(1, P["p"]), -F(1, P["p"])),
    gram_text="d = -1/p + j, a = 2n - 2d, b = 2m - 2d; " + _COMMON2,
    families=[
        Family("regular m=n=0", "regular", "m = n = 0",
               lambda P: P["m"] == 0 and P["n"] == 0,
               lambda P: w3_charge(F(1, P["p"]) - P.get("j", 0)),
               "50 - 24/(k+3) - 24(k+3), k+3 = 1/p - j",
               alt=lambda P: w3_charge(1 / (F(1, P["p"]) - P.get("j", 0))),
               needs=("p", "j")),
    ] + [_fam21(i, *x) for i, x in enumerate(_21_PECULIAR)],
    presentation=Presentation(
        generators=lambda P: (["[1,1,2]", "[1,2,2]"] if P["p"] >= 3 else [])
        + [f"1^{P['p']}", f"[1,2]^{P['p']}", f"2^{P['p']}"],
        dimension=_dim21,
        domain=lambda P: P["p"] >= 2,
        domain_text="p >= 2 (triple brackets absent at p = 2)",
        dimension_text="p^3",
        braiding=lambda P: (F(1, P["p"]), F(1, P["p"]), -F(1, P["p"])),
        notes="at p = 2 the triple-bracket generators are recorded as absent; "
              "their vanishing is checked, not assumed",
    ),
    notes="stable under Weyl reflections; W3 algebra at the regular solution",
))

_item(ItemSpec(
    "2.2", "q12 q21 q22 = 1, q11 = -1, q12 q21 in R_a (a >= 3)", None,
    cartan_type="A2", dynkin="-1 --q^-1-- q",
    params=(("p", ORDER, None), ("m", INT, None), ("n", INT, None), ("j", INT, None)),
    gram=lambda P: ((lambda d: (1 + 2 * F(P["n"]), 2 * P["m"] - 2 * d, d))(-F(1, P["p"]) + P["j"])),
    template=lambda P: (HALF, F(1, P["p"]), -F(1, P["p"])),
    gram_text="a = 1 + 2n, d = -1/p + j, b = 2m - 2d; " + _COMMON2,
    families=[
        Family("regular m=n=0", "regular", "m = n = 0",
               lambda P: P["m"] == 0 and P["n"] == 0,
               lambda P: coset_charge(F(1, P["p"]) - P.get("j", 0) - 2),
               "3k/(k+2) - 1, k+2 = 1/p - j", needs=("p", "j")),
    ],
    presentation=Presentation(
        generators=lambda P: ["[1,2,2]", "1^2", f"2^{P['p']}"],
        dimension=lambda P: 4 * P["p"],
        domain=lambda P: P["p"] >= 3,
        domain_text="p >= 3", dimension_text="4p",
        braiding=lambda P: (HALF, F(1, P["p"]), -F(1, P["p"])),
    ),
    notes="sl(2)_k / Heisenberg coset at the regular solution",
))


def _s_ok(P):
    return P["s"] % 3 != 0


def _c23_reg(P):
    return c23_charge(1 / (F(1, P["p"]) - P.get("j", 0)))


def _c23_reg_alt(P):
    return c23_charge(1 / (-F(1, P["p"]) + F(4, 3) + P.get("j", 0)))


_item(ItemSpec(
    "2.3", "q12 q21 q22 = 1, q11 in R_3, q12 q21 in R_a (a >= 2), q11 q12 q21 != 1", None,
    cartan_type="B2", dynkin="zeta --q^-1-- q",
    params=(("p", ORDER, None), ("s", "s3", None), ("m", INT, None), ("j", INT, None)),
    gram=lambda P: ((lambda d: (F(2 * P["s"], 3), 2 * P["m"] - 2 * d, d))(-F(1, P["p"]) + P["j"])),
    template=lambda P: (F(P["s"], 3), F(1, P["p"]), -F(1, P["p"])),
    gram_text="a = 2s/3 (s coprime to 3), d = -1/p + j, b = 2m - 2d; " + _COMMON2,
    families=[
        Family("regular m=0, s=1", "regular", "m = 0, s = 1",
               lambda P: P["m"] == 0 and P["s"] == 1, _c23_reg,
               "-21/2 - 6z - 27/(2(4z-3)), 1/z = 1/p - j", alt=_c23_reg_alt,
               needs=("p", "j")),
        Family("peculiar p=3", "peculiar", "m = 0, p = 3, s = 3l - 1, j = 1 - 2l",
               lambda P: (P["m"] == 0 and P["p"] == 3 and (P["s"] + 1) % 3 == 0
                          and P["j"] == 1 - 2 * ((P["s"] + 1) // 3)),
               lambda P: wb2_charge(F(-1, 3) + P.get("l", (P.get("s", 0) + 1) // 3)),
               "86 - 60(k+3) - 30/(k+3), k+3 = -1/3 + l",
               alt=lambda P: wb2_charge(1 / (F(-2, 3) + 2 * P.get("l", (P.get("s", 0) + 1) // 3))),
               needs=("l",)),
        Family("peculiar p=-3", "peculiar", "m = 0, p = -3, s = 3l + 1, j = -1 - 2l",
               lambda P: (P["m"] == 0 and P["p"] == -3 and (P["s"] - 1) % 3 == 0
                          and P["j"] == -1 - 2 * ((P["s"] - 1) // 3)),
               lambda P: wb2_charge(F(1, 3) + P.get("l", (P.get("s", 0) - 1) // 3)),
               "86 - 60(k+3) - 30/(k+3), k+3 = 1/3 + l",
               alt=lambda P: wb2_charge(1 / (F(2, 3) + 2 * P.get("l", (P.get("s", 0) - 1) // 3))),
               needs=("l",)),
    ],
    presentation=Presentation(
        generators=lambda P: ["[1,2,2]", "1^3", f"[1,1,2]^{_pp_23(P['p'])}", f"2^{P['p']}"],
        dimension=lambda P: 9 * P["p"] * _pp_23(P["p"]),
        domain=lambda P: P["p"] >= 4,
        domain_text="p >= 4", dimension_text="9 p p', p' = ord(q11 q22^-1)",
        braiding=lambda P: (F(1, 3), F(1, P["p"]), -F(1, P["p"])),
        notes="dimension not verified at desk scale",
    ),
    notes="q11 q12 q21 != 1 excludes p = 3 for s = 1",
))


def _wb2_k3(P):
    return F(1, P["p"]) + P.get("j", 0)


_item(ItemSpec(
    "2.4.1", "q12 q21 q22 = 1, q11 in R_a (a >= 4), q12 q21 = q11^-2", None,
    cartan_type="B2", dynkin="q --q^-2-- q^2",
    params=(("p", ORDER, None), ("m", INT, None), ("n", INT, None), ("j", INT, None)),
    gram=lambda P: ((lambda a: (a, 2 * P["m"] - 2 * (P["n"] - a), P["n"] - a))(F(2, P["p"]) + 2 * P["j"])),
    template=lambda P: (F(1, P["p"]), F(2, P["p"]), -F(2, P["p"])),
    gram_text="a = 2/p + 2j, d = n - a, b = 2m - 2d; " + _COMMON2,
    families=[
        Family("regular m=n=0", "regular", "m = n = 0",
               lambda P: P["m"] == 0 and P["n"] == 0,
               lambda P: wb2_charge(_wb2_k3(P)),
               "86 - 60(k+3) - 30/(k+3), k+3 = 1/p + j",
               alt=lambda P: wb2_charge(1 / (2 * _wb2_k3(P))), needs=("p", "j")),
        Family("peculiar p=4", "peculiar", "m = -2j, n = 0, p = 4",
               lambda P: P["p"] == 4 and P["n"] == 0 and P["m"] == -2 * P["j"],
               lambda P: -1 - F(24) / (4 * P["j"] + 1) + F(24) / (4 * P["j"] - 1),
               "-1 - 24/(4j+1) + 24/(4j-1)", needs=("j",)),
        Family("peculiar p=-4", "peculiar", "m = 1 - 2j, n = 0, p = -4",
               lambda P: P["p"] == -4 and P["n"] == 0 and P["m"] == 1 - 2 * P["j"],
               lambda P: -1 - F(24) / (4 * P["j"] - 1) + F(24) / (4 * P["j"] - 3),
               "-1 - 24/(4j-1) + 24/(4j-3)", needs=("j",)),
    ],
    presentation=Presentation(
        generators=lambda P: (
            ["[1,1,1,2]", "[1,2,2]", f"1^{P['p']}", f"[1,1,2]^{P['p']}",
             f"[1,2]^{P['p']}", f"2^{P['p']}"] if P["p"] % 2 else
            ["[1,1,1,2]"] + (["[1,2,2]"] if P["p"] != 4 else [])
            + [f"1^{P['p']}", f"[1,1,2]^{P['p'] // 2}", f"[1,2]^{P['p']}", f"2^{P['p'] // 2}"]),
        dimension=lambda P: P["p"] ** 4 if P["p"] % 2 else P["p"] ** 4 // 4,
        domain=lambda P: P["p"] >= 4,
        domain_text="p >= 5 odd, or p >= 4 even",
        dimension_text="p^4 (p odd), p^4/4 (p even)",
        braiding=lambda P: (F(1, P["p"]), F(2, P["p"]), -F(2, P["p"])),
        notes="[1,2,2] is absent from the ideal at p = 4",
    ),
    notes="WB2 algebra at the regular solution; FKW data |rho|^2 = 5/2, |rho_v|^2 = 5, <rho,rho_v> = 7/2",
))


def _wg2_k4(P):
    return F(1, P["p"]) + P.get("j", 0)


_item(ItemSpec(
    "2.4.2", "q12 q21 q22 = 1, q11 in R_a (a >= 4), q12 q21 = q11^-3", None,
    cartan_type="G2", dynkin="q --q^-3-- q^3",
    params=(("p", ORDER, None), ("m", INT, None), ("n", INT, None), ("j", INT, None)),
    gram=lambda P: ((lambda a: (a, 2 * P["m"] - 2 * (P["n"] - 3 * a / 2), P["n"] - 3 * a / 2))(F(2, P["p"]) + 2 * P["j"])),
    template=lambda P: (F(1, P["p"]), F(3, P["p"]), -F(3, P["p"])),
    gram_text="a = 2/p + 2j, d = n - 3a/2, b = 2m - 2d; " + _COMMON2,
    families=[
        Family("regular m=n=0", "regular", "m = n = 0",
               lambda P: P["m"] == 0 and P["n"] == 0,
               lambda P: wg2_charge(_wg2_k4(P)),
               "194 - 168(k+4) - 56/(k+4), k+4 = 1/p + j",
               alt=lambda P: wg2_charge(1 / (3 * _wg2_k4(P))), needs=("p", "j")),
        Family("peculiar p=4", "peculiar", "j = 0, m = 0, p = 4",
               lambda P: P["p"] == 4 and P["j"] == 0 and P["m"] == 0,
               lambda P: -10 - F(54) / (4 * P["n"] + 1) + F(24) / (4 * P["n"] - 3),
               "-10 - 54/(4n+1) + 24/(4n-3)", needs=("n",)),
        Family("peculiar p=6", "peculiar", "m = -3j, n = 0, p = 6",
               lambda P: P["p"] == 6 and P["n"] == 0 and P["m"] == -3 * P["j"],
               lambda P: F(-2, 3) + F(400) / (3 * (18 * P["j"] - 1)) - F(36) / (6 * P["j"] + 1),
               "-2/3 + 400/(3(18j-1)) - 36/(6j+1)", needs=("j",)),
        Family("peculiar p=-6", "peculiar", "m = 1 - 3j, n = 0, p = -6",
               lambda P: P["p"] == -6 and P["n"] == 0 and P["m"] == 1 - 3 * P["j"],
               lambda P: F(-2, 3) + F(400) / (3 * (18 * P["j"] - 7)) - F(36) / (6 * P["j"] - 1),
               "-2/3 + 400/(3(18j-7)) - 36/(6j-1)", needs=("j",)),
    ],
    notes="WG2 algebra at the regular solution; printed FKW data (|rho|^2 = 14, "
          "|rho_v|^2 = 14/3) give the transposed charge, see charge.LIE_DATA",
))


def _rj_item(iid, cond, cartan, dynkin, N, mult, families, template, notes=""):
    """Items 2.5-2.7: 2d = 2r/N + 2j, a - 2*mult*d = 2n, b = 2m - 2d."""
    def gram(P):
        d = F(P["r"], N) + P["j"]
        return 2 * P["n"] + 2 * mult * d, 2 * P["m"] - 2 * d, d
    return _item(ItemSpec(
        iid, cond, None, cartan_type=cartan, dynkin=dynkin,
        params=(("r", RES, N), ("m", INT, None), ("n", INT, None), ("j", INT, None)),
        gram=gram, template=template,
        gram_text=f"d = r/{N} + j (r coprime to {N}), a = 2n + {2 * mult}d, b = 2m - 2d; " + _COMMON2,
        families=families, notes=notes))


_rj_item(
    "2.5", "q12 q21 q22 = 1, q12 q21 in R_8, q11 = (q12 q21)^2", "G2",
    "zeta^2 --zeta-- zeta^-1", 8, 2,
    [Family("regular m=0, r=1-8j-4n", "regular", "m = 0, r = 1 - 8j - 4n",
            lambda P: P["m"] == 0 and P["r"] + 8 * P["j"] == 1 - 4 * P["n"],
            lambda P: -10 - F(48) / (4 * P["n"] - 1) + F(108) / (4 * P["n"] - 9),
            "-10 - 48/(4n-1) + 108/(4n-9)", needs=("n",))],
    lambda P: (F(P["r"], 4), -F(P["r"], 8), F(P["r"], 8)),
    notes="c = 26 at n = 0")

_rj_item(
    "2.6", "q12 q21 q22 = 1, q12 q21 in R_24, q11 = (q12 q21)^6", "G2",
    "zeta^6 --zeta-- zeta^-1", 24, 6,
    [Family("regular m=0, r=1-24j-4n", "regular", "m = 0, r = 1 - 24j - 4n",
            lambda P: P["m"] == 0 and P["r"] + 24 * P["j"] == 1 - 4 * P["n"],
            lambda P: -10 - F(144) / (4 * P["n"] - 1) + F(324) / (4 * P["n"] - 25),
            "-10 - 144/(4n-1) + 324/(4n-25)", needs=("n",))],
    lambda P: (F(P["r"], 4), -F(P["r"], 24), F(P["r"], 24)),
    notes="r coprime to 6 selects n = 2 + 3l or n = 3 + 3l")


def _fam27(shift, text, charge_text, charge):
    def match(P):
        if P["m"] != 0 or (P["n"] - 1) % 2:
            return False
        l = (P["n"] - 1) // 2
        return (l - shift) % 6 == 0 and P["r"] + 30 * P["j"] == -2 - 5 * l

    def ev(P):
        u = P["u"] if "u" in P else ((P["n"] - 1) // 2 - shift) // 6
        return charge(F(u))
    return Family(f"regular l={shift}+6u", "regular", text, match, ev, charge_text, needs=("u",))


_rj_item(
    "2.7", "q12 q21 q22 = 1, q12 q21 in R_30, q11 = (q12 q21)^12", "(2,-4),(-1,2)",
    "zeta^12 --zeta-- zeta^-1", 30, 12,
    [_fam27(1, "m = 0, n = 1 + 2l, r = -2 - 5l - 30j, l = 1 + 6u",
            "-62/5 + 2916/(5(30u-17)) - 180/(30u+7)",
            lambda u: F(-62, 5) + F(2916) / (5 * (30 * u - 17)) - F(180) / (30 * u + 7)),
     _fam27(3, "m = 0, n = 1 + 2l, r = -2 - 5l - 30j, l = 3 + 6u",
            "-62/5 + 2916/(5(30u-7)) - 180/(30u+17)",
            lambda u: F(-62, 5) + F(2916) / (5 * (30 * u - 7)) - F(180) / (30 * u + 17))],
    lambda P: (F(2 * P["r"], 5), -F(P["r"], 30), F(P["r"], 30)),
    notes="labelled as printed ('solved by'); no regular/peculiar label is given")

# items 3.* ------------------------------------------------------------------
_COMMON3 = "beta.beta = 1 + 2m"


def _k31(P):
    return F(1, P["p"]) + P.get("j", 0) - 1


_item(ItemSpec(
    "3.1", "item 3 conditions, q11 = -1, q12 q21 in R_a (a >= 3)", None,
    cartan_type="A2", dynkin="-1 --q-- -1",
    params=(("p", ORDER, None), ("m", INT, None), ("n", INT, None), ("j", INT, None)),
    gram=lambda P: (1 + 2 * F(P["n"]), 1 + 2 * F(P["m"]), F(1, P["p"]) + P["j"]),
    template=lambda P: (HALF, HALF, F(1, P["p"])),
    gram_text="a = 1 + 2n, d = 1/p + j, b = 1 + 2m",
    families=[
        Family("regular m=n=0", "regular", "m = n = 0",
               lambda P: P["m"] == 0 and P["n"] == 0,
               lambda P: coset_charge(_k31(P)),
               "3k/(k+2) - 1, k+1 = 1/p + j", needs=("p", "j")),
    ],
    presentation=Presentation(
        generators=lambda P: ["1^2", f"[1,2]^{P['p']}", "2^2"],
        dimension=lambda P: 4 * P["p"],
        domain=lambda P: P["p"] >= 3,
        domain_text="p >= 3", dimension_text="4p",
        braiding=lambda P: (HALF, HALF, F(1, P["p"])),
    ),
    notes="no peculiar solutions; at j = 0, 1/(p+1) + 1/(k+2) = 1",
))


def _sl_gram(dfun):
    def gram(P):
        a = F(2 * P["s"], 3) + 2 * P["l"]
        return a, 1 + 2 * F(P["m"]), dfun(a, P["n"])
    return gram


_item(ItemSpec(
    "3.2.1", "item 3 conditions, q11 in R_3, q12 q21 = q11", None,
    cartan_type="B2", dynkin="zeta --zeta-- -1",
    params=(("s", RES, 3), ("l", INT, None), ("m", INT, None), ("n", INT, None)),
    gram=_sl_gram(lambda a, n: a / 2 + n),
    template=lambda P: (F(P["s"], 3), HALF, F(P["s"], 3)),
    gram_text="a = 2s/3 + 2l, d = a/2 + n, b = 1 + 2m",
    families=[
        Family("regular m=0, s=1-3l", "regular", "m = 0, s = 1 - 3l",
               lambda P: P["m"] == 0 and P["s"] + 3 * P["l"] == 1,
               lambda P: 2 - F(6 * (12 * P["n"] - 7)) / (9 * P["n"] ** 2 + 6 * P["n"] - 5),
               "2 - 6(12n-7)/(9n^2+6n-5)", needs=("n",)),
        Family("regular m=0, s=-n-3l", "regular", "m = 0, s = -n - 3l",
               lambda P: P["m"] == 0 and P["s"] + 3 * P["l"] == -P["n"],
               lambda P: -1 - F(36) / (2 * P["n"] + 3) + F(18) / P["n"],
               "-1 - 36/(2n+3) + 18/n", needs=("n",)),
    ],
    notes="labels as printed ('can be solved only if'); no regular/peculiar label given",
))

_item(ItemSpec(
    "3.2.2", "item 3 conditions, q11 in R_3, q12 q21 = -q11", None,
    cartan_type="B2", dynkin="zeta --(-zeta)-- -1",
    params=(("s", RES, 3), ("l", INT, None), ("m", INT, None), ("n", INT, None)),
    gram=_sl_gram(lambda a, n: (a + 1 + 2 * n) / 2),
    template=lambda P: (F(P["s"], 3), HALF, F(P["s"], 3) + HALF),
    gram_text="a = 2s/3 + 2l, d = (a + 1 + 2n)/2, b = 1 + 2m",
    families=[
        Family("regular m=0, s=1-3l", "regular", "m = 0, s = 1 - 3l",
               lambda P: P["m"] == 0 and P["s"] + 3 * P["l"] == 1,
               lambda P: 2 - F(24 * (12 * P["n"] - 1)) / (36 * P["n"] ** 2 + 60 * P["n"] + 1),
               "2 - 24(12n-1)/(36n^2+60n+1)", needs=("n",)),
    ],
    presentation=Presentation(
        generators=lambda P: ["[1,1,2,1,2]", "1^3", "2^2"],
        dimension=lambda P: 36,
        domain=lambda P: True,
        domain_text="zeta in R_3", dimension_text="36",
        braiding=lambda P: (F(1, 3), HALF, F(1, 3) + HALF),
    ),
    notes="the printed a = 2s/3 omits the 2l used in the braiding matrix; restored here",
))


def _generic3(iid, cond, N, dfun, afun, template, text):
    def gram(P):
        d = dfun(F(P["r"], N), P["j"], P["n"])
        return afun(d, P["r"], P["j"], P["n"]), 1 + 2 * F(P["m"]), d
    return _item(ItemSpec(
        iid, cond, None,
        params=(("r", RES, N), ("m", INT, None), ("n", INT, None), ("j", INT, None)),
        gram=gram, template=template, gram_text=text + "; " + _COMMON3,
        notes="conditions only; no solutions or charges recorded"))


_generic3("3.3", "item 3 conditions, q0 = q11 q12 q21 in R_12, q11 = q0^4", 12,
          lambda x, j, n: -n - 3 * x - 3 * j,
          lambda d, r, j, n: F(2 * r, 3) + 8 * j + 2 * n,
          lambda P: (F(P["r"], 3), HALF, -F(P["r"], 4)),
          "a = 2r/3 + 8j + 2n, d = -n - r/4 - 3j")
_generic3("3.4", "item 3 conditions, q12 q21 in R_12, q11 = -(q12 q21)^2", 12,
          lambda x, j, n: x + j, lambda d, r, j, n: 4 * d + 1 + 2 * n,
          lambda P: (HALF + F(P["r"], 6), HALF, F(P["r"], 12)),
          "d = r/12 + j, a = 4d + 1 + 2n")
_generic3("3.5", "item 3 conditions, q12 q21 in R_9, q11 = (q12 q21)^-3", 9,
          lambda x, j, n: x + j, lambda d, r, j, n: -6 * d + 2 * n,
          lambda P: (-F(P["r"], 3), HALF, F(P["r"], 9)),
          "d = r/9 + j, a = -6d + 2n")
_generic3("3.6", "item 3 conditions, q12 q21 in R_24, q11 = -(q12 q21)^4", 24,
          lambda x, j, n: x + j, lambda d, r, j, n: 8 * d + 1 + 2 * n,
          lambda P: (HALF + F(P["r"], 6), HALF, F(P["r"], 24)),
          "d = r/24 + j, a = 8d + 1 + 2n (the +1 carries the sign of q11)")
_generic3("3.7", "item 3 conditions, q12 q21 in R_30, q11 = -(q12 q21)^5", 30,
          lambda x, j, n: x + j, lambda d, r, j, n: 10 * d + 1 + 2 * n,
          lambda P: (HALF + F(P["r"], 6), HALF, F(P["r"], 30)),
          "d = r/30 + j, a = 10d + 1 + 2n")


# items 4.* ------------------------------------------------------------------
def _k41(P):
    return -1 / (F(1, P["p"]) + P.get("j", 0)) - 1


def _k41_alt(P):
    return 1 / (F(1, P["p"]) + P.get("j", 0) - HALF) - 1


_item(ItemSpec(
    "4.1", "item 4 conditions, q11 in R_a (a >= 5), q12 q21 = q11^-2", None,
    cartan_type="B2", dynkin="q --q^-2-- -1",
    params=(("p", ORDER, None), ("m", INT, None), ("n", INT, None), ("j", INT, None)),
    gram=lambda P: ((lambda a: (a, 1 + 2 * F(P["m"]), P["n"] - a))(F(2, P["p"]) + 2 * P["j"])),
    template=lambda P: (F(1, P["p"]), HALF, -F(2, P["p"])),
    gram_text="a = 2/p + 2j, d = n - a, b = 1 + 2m",
    families=[
        Family("regular m=n=0", "regular", "m = n = 0",
               lambda P: P["m"] == 0 and P["n"] == 0,
               lambda P: w3_2_charge(_k41(P)),
               "-25 + 24/(k+3) + 6(k+3), 1/p + j = -1/(k+1)",
               alt=lambda P: w3_2_charge(_k41_alt(P)), needs=("p", "j")),
    ],
    presentation=Presentation(
        generators=lambda P: ["[1,1,1,2]", f"1^{P['p']}", f"[1,2]^{_pp_41(P['p'])}", "2^2"],
        dimension=lambda P: 4 * P["p"] * _pp_41(P["p"]),
        domain=lambda P: P["p"] >= 5,
        domain_text="p >= 5", dimension_text="4 p p', p' = ord(-e^{2 pi i/p})",
        braiding=lambda P: (F(1, P["p"]), HALF, -F(2, P["p"])),
    ),
    notes="minus the W_3^(2) central charge",
))


def _generic(iid, cond, roots):
    """Conditions-only items lifted by honest logarithms of their angles."""
    def gram(P):
        return (2 * P["t11"] + 2 * P["n1"], 2 * P["t22"] + 2 * P["n2"], P["tm"] + P["j"])
    return _item(ItemSpec(
        iid, cond, None,
        params=(("root", "root", None), ("n1", INT, None), ("n2", INT, None), ("j", INT, None)),
        gram=gram, gram_text="a = 2 t11 + 2 n1, b = 2 t22 + 2 n2, d = tm + j "
                             "(t = angle of the entry in [0, 1))",
        roots=roots, notes="conditions only; no solutions or charges recorded"))


def _rel_q11(k, t22=HALF):
    return lambda t: (t, t22, -k * t)


def _rel_m(k, t22=HALF):
    return lambda t: (k * t, t22, t)


_generic("4.2", "item 4 conditions, q11 in R_5, R_8, R_12, R_14, R_20, q12 q21 = q11^-3",
         _gen_roots((5, 8, 12, 14, 20), _rel_q11(3)))
_generic("4.3", "item 4 conditions, q11 in R_10, R_18, q12 q21 = q11^-4",
         _gen_roots((10, 18), _rel_q11(4)))
_generic("4.4", "item 4 conditions, q11 in R_14, R_24, q12 q21 = q11^-5",
         _gen_roots((14, 24), _rel_q11(5)))
_generic("4.5", "item 4 conditions, q12 q21 in R_8, q11 = (q12 q21)^-2", _gen_roots((8,), _rel_m(-2)))
_generic("4.6", "item 4 conditions, q12 q21 in R_12, q11 = (q12 q21)^-3", _gen_roots((12,), _rel_m(-3)))
_generic("4.7", "item 4 conditions, q12 q21 in R_20, q11 = (q12 q21)^-4", _gen_roots((20,), _rel_m(-4)))
_generic("4.8", "item 4 conditions, q12 q21 in R_30, q11 = (q12 q21)^-6", _gen_roots((30,), _rel_m(-6)))

# items 5.* ------------------------------------------------------------------
_generic("5.1", "item 5 conditions, q0 = q11 q12 q21 in R_12, q11 = q0^4, q22 = -q0^2",
         _gen_roots((12,), lambda q0: (4 * q0, HALF + 2 * q0, -3 * q0)))
_generic("5.2", "item 5 conditions, q12 q21 in R_12, q11 = q22 = -(q12 q21)^2",
         _gen_roots((12,), lambda t: (HALF + 2 * t, HALF + 2 * t, t)))
_generic("5.3", "item 5 conditions, q12 q21 in R_24, q11 = (q12 q21)^-6, q22 = (q12 q21)^-8",
         _gen_roots((24,), lambda t: (-6 * t, -8 * t, t)))
_generic("5.4", "item 5 conditions, q11 in R_18, q12 q21 = q11^-2, q22 = -q11^3",
         _gen_roots((18,), lambda t: (t, HALF + 3 * t, -2 * t)))
_generic("5.5", "item 5 conditions, q11 in R_30, q12 q21 = q11^-3, q22 = -q11^5",
         _gen_roots((30,), lambda t: (t, HALF + 5 * t, -3 * t)))


# -- lookups ------------------------------------------------------------------

def _id_key(s):
    return tuple(int(x) for x in s.split("."))


def item_ids():
    return sorted(ITEMS, key=_id_key)


def get_item(iid):
    try:
        return ITEMS[str(iid)]
    except KeyError:
        raise UnknownItem(f"no catalog item {iid!r}") from None


def match_braiding(b):
    if b.theta != 2:
        raise ValueError("catalog matching needs a rank-2 braiding")
    t = angles_of(b)
    return [i for i in item_ids() if ITEMS[i].predicate(*t)]


def _select_family(item, cls, params):
    cands = [f for f in item.families if f.cls == cls]
    if not cands:
        raise NoChargeRecorded(f"item {item.id} has no {cls} charge recorded")
    label = params.get("family")
    if label is not None:
        for f in cands:
            if f.label == label or str(cands.index(f) + 1) == str(label):
                return f
        raise NoChargeRecorded(f"item {item.id} has no {cls} family {label!r}")
    for f in cands:
        try:
            if f.match(params):
                return f
        except KeyError:
            pass
    return cands[0]


def expected_charge(iid, cls, params):
    """The printed closed form for a recorded solution family."""
    item = get_item(iid)
    if item.conditions_only:
        raise NoChargeRecorded(f"item {iid} is conditions-only")
    params = {k: (F(v) if not isinstance(v, str) else v) for k, v in params.items()}
    for k in ("p", "j", "m", "n", "r", "s", "l"):
        if k in params and isinstance(params[k], F) and params[k].denominator == 1:
            params[k] = int(params[k])
    return _select_family(item, cls, params).charge(params)


def expected_dimension(iid, params):
    item = get_item(iid)
    pres = item.presentation
    if pres is None:
        raise NoPresentation(f"item {iid} has no recorded presentation")
    if not pres.domain(params):
        raise OutOfDomain(f"item {iid}: parameters outside {pres.domain_text}")
    return int(pres.dimension(params))


def presentation_braiding(iid, params):
    from .braiding import BraidingMatrix
    item = get_item(iid)
    if item.presentation is None:
        raise NoPresentation(f"item {iid} has no recorded presentation")
    if not item.presentation.domain(params):
        raise OutOfDomain(f"item {iid}: parameters outside {item.presentation.domain_text}")
    t11, t22, tm = item.presentation.braiding(params)
    return BraidingMatrix.rank2(RationalAngle(t11), RationalAngle(t22), RationalAngle(tm))


def catalog_json():
    return {"items": [ITEMS[i].to_json() for i in item_ids()]}


# -- enumeration ----------------------------------------------------------------

DEFAULT_BOUNDS = {"int": 10, "order": (2, 12)}


def _ranges(item, bounds):
    b = dict(DEFAULT_BOUNDS)
    b.update(bounds or {})
    out = []
    for name, kind, extra in item.params:
        if name in b:
            v = b[name]
            if isinstance(v, int):
                vals = range(-v, v + 1)
            elif isinstance(v, tuple) and len(v) == 2 and kind == ORDER:
                vals = [s * p for p in range(v[0], v[1] + 1) for s in (1, -1)]
            else:
                vals = list(v)
        elif kind == INT:
            vals = range(-b["int"], b["int"] + 1)
        elif kind == ORDER:
            lo, hi = b["order"]
            vals = [s * p for p in range(max(lo, 1), hi + 1) for s in (1, -1)]
        elif kind == RES:
            vals = _units(extra)
        elif kind == "s3":
            vals = [s for s in range(-b["int"], b["int"] + 1) if s % 3]
        elif kind == "root":
            vals = list(item.roots())
        else:
            raise ValueError(kind)
        out.append((name, sorted(vals) if kind != "root" else vals))
    return out


def _product(ranges):
    names = [n for n, _ in ranges]

    def rec(i, acc):
        if i == len(ranges):
            yield dict(zip(names, acc))
            return
        for v in ranges[i][1]:
            yield from rec(i + 1, acc + (v,))
    return rec(0, ())


_CARTAN_CACHE = {}


def _cartan_of(t11, t22, tm):
    key = (t11 % 1, t22 % 1, tm % 1)
    if key not in _CARTAN_CACHE:
        from .braiding import BraidingMatrix, generalized_cartan
        from .errors import NotAdmissible
        b = BraidingMatrix.rank2(RationalAngle(t11), RationalAngle(t22), RationalAngle(tm))
        try:
            _CARTAN_CACHE[key] = generalized_cartan(b)
        except NotAdmissible:
            _CARTAN_CACHE[key] = None
    return _CARTAN_CACHE[key]


def _branch(gii, gij, aij):
    first = 2 * gij == aij * gii
    second = (1 - aij) * gii == 2
    return "both" if first and second else "first" if first else "second" if second else "neither"


def _unpack(params):
    if "root" in params:
        t11, t22, tm = params.pop("root")
        params.update(t11=t11, t22=t22, tm=tm)
    return params


def enumerate_item(iid, bounds=None):
    """All parameter tuples in the box whose Gram passes the lifted Cartan test.

    Tuples whose braiding violates the item's defining conditions are
    dropped first (this is where e.g. |p| >= 3 is enforced).  Records are
    sorted lexicographically by parameters.
    """
    from .charge import GramMatrix, solve_xi
    from .errors import DegenerateMomenta
    item = get_item(iid)
    out = []
    seen = {}  # reduced angles -> Cartan matrix, or None when excluded
    for P in _product(_ranges(item, bounds)):
        P = _unpack(P)
        try:
            a, b, d = item.gram(P)
        except ZeroDivisionError:
            continue
        key = ((a / 2) % 1, (b / 2) % 1, d % 1)
        A = seen.get(key, False)
        if A is False:
            A = seen[key] = _cartan_of(*key) if item.predicate(*key) else None
        if A is None:
            continue
        br = {(0, 1): _branch(a, d, A[0][1]), (1, 0): _branch(b, d, A[1][0])}
        if "neither" in br.values():
            continue
        g = GramMatrix.rank2(a, b, d)
        try:
            c = solve_xi(g).charge
        except DegenerateMomenta:
            c = None
        fams = [f for f in item.families if f.match(P)]
        mismatch = [f.label for f in fams if c is not None and f.charge(P) != c]
        cls = ("regular" if any(f.cls == "regular" for f in fams)
               else "peculiar" if fams else "unclassified")
        out.append({"params": P, "gram": g, "cartan": A, "branches": br, "class": cls,
                    "families": [f.label for f in fams], "charge": c,
                    "charge_mismatch": mismatch})
    out.sort(key=lambda r: tuple(_sort_key(v) for v in r["params"].values()))
    return out


def _sort_key(v):
    return v if not isinstance(v, tuple) else tuple(v)


def record_json(r):
    def fmt(v):
        return format_rational(v) if isinstance(v, (int, F)) else str(v)
    return {"params": {k: fmt(v) for k, v in r["params"].items()},
            "gram": r["gram"].to_json(),
            "cartan": [list(x) for x in r["cartan"]],
            "branches": {f"{i + 1},{j + 1}": b for (i, j), b in sorted(r["branches"].items())},
            "class": r["class"], "families": r["families"],
            "charge": None if r["charge"] is None else format_rational(r["charge"]),
            "charge_mismatch": r["charge_mismatch"]}


def dump_catalog(path=None):
    text = json.dumps(catalog_json(), indent=2)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text
