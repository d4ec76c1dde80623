from fractions import Fraction as F

import pytest

from nicholscc import catalog
from nicholscc.braiding import (BraidingMatrix, DynkinDiagram, cartan_branches,
                                generalized_cartan, reflect, twist_equivalent, weyl_orbit)
from nicholscc.charge import GramMatrix
from nicholscc.errors import NotAdmissible
from nicholscc.exact import RationalAngle


def rank2(q11, q22, m):
    return BraidingMatrix.rank2(q11, q22, m)


def oracle_cartan(b):
    """Straight from the defining test, with angles as Fractions mod 1."""
    n = b.theta
    out = [[2] * n for _ in range(n)]
    for i in range(n):
        t = b[i, i].t
        for j in range(n):
            if i == j:
                continue
            m = b.monodromy(i, j).t
            k = 0
            while ((m + k * t) % 1 != 0) and (((k + 1) * t) % 1 != 0):
                k += 1
                if k > 200:
                    return None
            out[i][j] = -k
    return tuple(map(tuple, out))


def test_cartan_examples():
    assert generalized_cartan(rank2("1/5", "1/5", "4/5")) == ((2, -1), (-1, 2))
    assert generalized_cartan(rank2("1/7", "2/9", "0")) == ((2, 0), (0, 2))
    assert generalized_cartan(rank2("1/5", "2/5", "3/5")) == ((2, -2), (-1, 2))


def test_cartan_matches_oracle(rng):
    for _ in range(300):
        n = rng.choice([2, 3, 4, 5, 6, 8, 12])
        t = [F(rng.randrange(n), n) for _ in range(3)]
        b = rank2(*t)
        want = oracle_cartan(b)
        try:
            got = generalized_cartan(b)
        except NotAdmissible:
            got = None
        assert got == want
        if got:
            assert "neither" not in cartan_branches(b, got).values()


def test_reflect_item_22():
    # the q11 = -1 node; the printed "k=2" labels it by its other diagonal
    b = rank2("1/2", "1/5", "4/5")
    r = reflect(b, 0)
    assert r.diagonal() == (RationalAngle.parse("1/2"), RationalAngle.parse("1/2"))
    assert r.monodromy(0, 1) == RationalAngle.parse("1/5")


def test_reflect_item_21_is_stable():
    b = rank2("1/5", "1/5", "4/5")
    assert twist_equivalent(reflect(b, 0), b)


def test_reflect_keeps_diagonal_entry_and_is_involutive(rng):
    for _ in range(200):
        n = rng.choice([3, 4, 5, 6, 8])
        b = rank2(*[F(rng.randrange(n), n) for _ in range(3)])
        try:
            generalized_cartan(b)
        except NotAdmissible:
            continue
        for k in range(2):
            r = reflect(b, k)
            assert r[k, k] == b[k, k]
            assert twist_equivalent(reflect(r, k), b)


def test_orbits():
    orbit = weyl_orbit(rank2("1/2", "1/5", "4/5"))
    assert len(orbit) == 3
    diags = {tuple(str(x) for x in o.braiding.diagonal()) for o in orbit}
    assert diags == {("1/2", "1/5"), ("1/2", "1/2"), ("1/5", "1/2")}
    assert len(weyl_orbit(rank2("1/5", "1/5", "4/5"))) == 1
    g = GramMatrix.rank2(*catalog.get_item("2.6").gram({"r": 1, "j": 0, "m": 0, "n": 0}))
    assert ((2, -3), (-2, 2)) in [o.cartan for o in weyl_orbit(g.braiding())]


def test_cartan_type_orbits_keep_the_matrix():
    for b in (rank2("1/5", "1/5", "4/5"), rank2("1/7", "2/7", "5/7")):
        a = generalized_cartan(b)
        if all(v == "first" or v == "both" for v in cartan_branches(b, a).values()):
            assert {o.cartan for o in weyl_orbit(b)} == {a}


def test_catalog_orbits_are_small():
    for iid in ("2.1", "2.2", "2.4.1", "3.1", "3.2.2", "4.1"):
        item = catalog.get_item(iid)
        if item.presentation is None:
            continue
        for p in (3, 4, 5):
            try:
                b = catalog.presentation_braiding(iid, {"p": p})
            except Exception:
                continue
            assert len(weyl_orbit(b, cap=8)) <= 8


def test_twist_equivalence():
    b1 = BraidingMatrix((("1/3", "1/6"), ("1/2", "1/3")))
    b2 = BraidingMatrix((("1/3", "2/3"), ("0", "1/3")))
    assert twist_equivalent(b1, b2)
    assert not twist_equivalent(rank2("1/3", "1/3", "2/3"), rank2("1/5", "1/5", "4/5"))
    b = rank2("1/5", "2/5", "3/5")
    assert twist_equivalent(reflect(reflect(b, 0), 0), b)


def test_json_round_trip():
    b = BraidingMatrix.from_json({"theta": 2, "q": [["1/5", "9/10"], ["9/10", "1/5"]]})
    assert BraidingMatrix.from_json(b.to_json()) == b
    assert BraidingMatrix.from_json(str(b)) == b


def test_dynkin_text():
    assert DynkinDiagram.of(rank2("1/3", "1/3", "2/3")).text() == "1/3 --2/3-- 1/3"
