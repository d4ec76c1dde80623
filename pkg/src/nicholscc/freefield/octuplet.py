"""The octuplet of W3 primaries generated from e^{gamma.phi} by long screenings.

Fields are normalized by construction: W = e^{gamma.phi} with
gamma = p(alpha + beta), and every other field is obtained by applying the
long screenings E_a = res e^{-p alpha.phi}, E_b = res e^{-p beta.phi}
without rescaling.  Subscripts read right to left: W_ba = E_b W_a.
"""

from fractions import Fraction

from ..charge import solve_xi
from ..errors import OutOfDomain, StructureMismatch
from ..report import Report
from .ope import build_T, find_primary, is_primary, ope, screening_residue
from .fields import Field
from .verify import regular_gram

__all__ = ["OctupletFields", "build_octuplet", "octuplet", "octuplet_opes",
           "OCTUPLET_GOLDEN", "NAMES"]

NAMES = ("W", "a", "b", "ba", "ab", "aba", "bab", "aabb")

# OPE coefficients under the normalization above; frozen after an
# independent recomputation with the factor-by-factor Wick enumerator
OCTUPLET_GOLDEN = {
    2: {"c1": Fraction(60), "c2": Fraction(-48), "c3": Fraction(-18), "c3'": Fraction(-18)},
    3: {"c1": Fraction(19440), "c2": Fraction(-9072), "c3": Fraction(594), "c3'": Fraction(594)},
}


class OctupletFields:
    def __init__(self, p):
        p = int(p)
        if p < 2:
            raise OutOfDomain("the octuplet needs p >= 2")
        self.p = p
        self.g = regular_gram("2.1", p)
        self.x = solve_xi(self.g).x
        self.T = build_T(self.g)
        self.W3 = find_primary(self.g, 3, t=self.T)
        f = {"W": Field.exp((p, p))}
        f["a"] = self.Ea(f["W"])
        f["b"] = self.Eb(f["W"])
        f["ba"] = self.Eb(f["a"])
        f["ab"] = self.Ea(f["b"])
        f["aba"] = self.Ea(f["ba"])
        f["bab"] = self.Eb(f["ab"])
        f["aabb"] = self.Eb(f["aba"])
        self.fields = f

    def Ea(self, x):
        return screening_residue(self.g, (-self.p, 0), x)

    def Eb(self, x):
        return screening_residue(self.g, (0, -self.p), x)

    def __getitem__(self, name):
        return self.fields[name]

    def weight(self, name):
        ws = self.fields[name].weight_of(self.g, self.x)
        return ws[0] if len(ws) == 1 else ws


def build_octuplet(p):
    return OctupletFields(p)


def octuplet(p, fields=None, strict=False):
    """Structure report: momenta, weights, prefactor orders and diagram arrows."""
    o = fields or OctupletFields(p)
    p = o.p
    rep = Report("octuplet", {"p": p, "gram": o.g.to_json()})
    h = 3 * p - 2
    table = {}
    for n in NAMES:
        f = o[n]
        table[n] = {"momentum": list(f.momentum()), "weight": o.weight(n),
                    "order": f.order(), "terms": len(f.terms)}
    rep.outputs["fields"] = table
    rep.check("eight nonzero fields", 8, sum(1 for n in NAMES if o[n]))
    rep.check(f"all weights {h}", [h] * 8, [table[n]["weight"] for n in NAMES])
    want = [p - 1, p - 1, 3 * p - 2, 3 * p - 2, 3 * p - 3, 3 * p - 3, 4 * p - 4]
    rep.check("prefactor orders", want, [table[n]["order"] for n in NAMES[1:]])
    rep.check("W_ab, W_ba momenta", [[0, 0], [0, 0]], [table["ab"]["momentum"], table["ba"]["momentum"]])
    zeros = {"Ea W_a": o.Ea(o["a"]), "Eb W_b": o.Eb(o["b"]),
             "Ea W_aba": o.Ea(o["aba"]), "Eb W_bab": o.Eb(o["bab"]),
             "Ea W_aabb": o.Ea(o["aabb"]), "Eb W_aabb": o.Eb(o["aabb"])}
    for name, z in zeros.items():
        rep.check(f"{name} = 0", True, not z)
    rep.check("Ea W_bab = W_aabb", 1, o.Ea(o["bab"]).ratio_to(o["aabb"]))
    factor = Fraction((-1) ** p, 2)
    # dashed arrows: target = factor * (long screening of the source)
    for name, img, target in (("W_aba / Ea W_ab", o.Ea(o["ab"]), o["aba"]),
                              ("W_bab / Eb W_ba", o.Eb(o["ba"]), o["bab"])):
        r = target.ratio_to(img)
        rep.check(f"dashed factor {name}", factor, r)
    extra = [(o.W3, 3)]
    prim = [n for n in NAMES
            if is_primary(o.g, o[n], o.T, extra, from_zero=True, weight=h)]
    rep.check("W3 primaries (L_n>0, W_n>=0 annihilate; L_0 = h)", list(NAMES), prim)
    if strict and not rep.ok:
        raise StructureMismatch(rep.failures()[0].name)
    return rep


def octuplet_opes(p, fields=None, strict=False):
    o = fields or OctupletFields(p)
    p = o.p
    g, t = o.g, o.T
    rep = Report("octuplet-opes", {"p": p})
    top = 6 * p - 4
    e = ope(g, o["W"], o["aabb"], lowest=top - 3)
    rep.check("W x W_aabb leading order", top, e.orders()[0] if e.orders() else None)
    c1 = e.pole(top).coefficient([])
    rep.check("order 6p-4 is c1 * 1", True, e.pole(top) == Field.one(2).scale(c1) and c1 != 0)
    rep.check("order 6p-5 vanishes", True, not e.pole(top - 1))
    c2 = e.pole(top - 2).ratio_to(t)
    rep.check("order 6p-6 is c2 * T, c2 != 0", True, bool(c2))
    dt = e.pole(top - 3).ratio_to(t.derivative())
    rep.check("order 6p-7 is (c2/2) dT (no W channel)", c2 / 2 if c2 else None, dt)
    # the same ratio from the opposite ordering
    e2 = ope(g, o["aabb"], o["W"], lowest=top - 2)
    r1 = e2.pole(top - 2).ratio_to(t)
    d1 = e2.pole(top).coefficient([])
    rep.check("c2/c1 from the swapped ordering", c2 / c1 if c1 and c2 else None,
              r1 / d1 if r1 is not None and d1 else None)
    h = 3 * p - 2
    e = ope(g, o["a"], o["b"], lowest=h)
    c3 = e.pole(h).ratio_to(o["W"])
    rep.check("W_a x W_b = c3 W / (z-w)^(3p-2) + ...", True,
              e.orders() == [h] and bool(c3))
    for a, b in (("a", "aba"), ("b", "bab")):
        e = ope(g, o[a], o[b], depth=1)
        rep.check(f"W_{a} x W_{b} = O(z-w)", [], e.orders())
    e = ope(g, o["aba"], o["bab"], lowest=h)
    c3p = e.pole(h).ratio_to(o["aabb"])
    rep.check("W_aba x W_bab = c3' W_aabb / (z-w)^(3p-2) + ...", True,
              e.orders() == [h] and bool(c3p))
    values = {"c1": c1, "c2": c2, "c3": c3, "c3'": c3p}
    rep.outputs["coefficients"] = values
    gold = OCTUPLET_GOLDEN.get(p)
    if gold:
        for k, v in gold.items():
            rep.check(f"golden {k}", v, values[k])
    if strict and not rep.ok:
        raise StructureMismatch(rep.failures()[0].name)
    return rep
