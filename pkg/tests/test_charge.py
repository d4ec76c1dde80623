from fractions import Fraction as F

import pytest

from nicholscc.charge import (LIE_DATA, GramMatrix, central_charge_rank2, check_cartan_log,
                              enumerate_solutions, fkw_charge, rank2_defect, reflect_gram,
                              solve_xi, verify_invariance)
from nicholscc.errors import DegenerateMomenta, InvarianceFailure, PoleAtCriticalLevel

A2 = ((2, -1), (-1, 2))
W3_GRAM = GramMatrix.rank2("2/3", "2/3", "-1/3")
COSET_GRAM = GramMatrix.rank2(1, "2/5", "-1/5")


def gram(rows):
    return GramMatrix(tuple(map(tuple, rows)))


def rand_gram(rng, den=20):
    while True:
        a, b, d = (F(rng.randint(-3 * den, 3 * den), rng.randint(1, den)) for _ in range(3))
        if a * b != d * d:
            return GramMatrix.rank2(a, b, d)


def test_solve_xi_examples():
    s = solve_xi(gram([[2]]))
    assert s.x == (0,) and s.charge == 1
    s = solve_xi(W3_GRAM)
    assert s.x == (-2, -2) and s.charge == -30
    assert solve_xi(gram([["2/3"]])).charge == -7


def test_single_boson_formula(rng):
    for _ in range(50):
        a = F(rng.randint(-40, 40), rng.randint(1, 20))
        if a:
            assert solve_xi(gram([[a]])).charge == 1 - 3 * (a - 2) ** 2 / a


def test_rank2_closed_form_examples():
    assert central_charge_rank2(W3_GRAM) == -30
    assert central_charge_rank2(GramMatrix.rank2(2, 2, 0)) == 2
    assert central_charge_rank2(COSET_GRAM) == -28


def test_rank2_closed_form_random(rng):
    for _ in range(300):
        g = rand_gram(rng)
        assert central_charge_rank2(g) == solve_xi(g).charge


def test_degenerate():
    with pytest.raises(DegenerateMomenta):
        solve_xi(GramMatrix.rank2(1, 1, 1))
    with pytest.raises(DegenerateMomenta):
        central_charge_rank2(GramMatrix.rank2(4, 1, 2))


def test_block_additivity(rng):
    for _ in range(50):
        a, b = (F(rng.randint(1, 40), rng.randint(1, 9)) * rng.choice([1, -1]) for _ in range(2))
        g2 = rand_gram(rng, 6)
        block = [[a, 0, 0], [0, g2[0, 0], g2[0, 1]], [0, g2[1, 0], g2[1, 1]]]
        assert solve_xi(gram(block)).charge == solve_xi(gram([[a]])).charge + solve_xi(g2).charge
        assert solve_xi(GramMatrix.rank2(a, b, 0)).charge == (
            solve_xi(gram([[a]])).charge + solve_xi(gram([[b]])).charge)


def test_reflect_gram_examples():
    r = reflect_gram(W3_GRAM, A2, 0)
    assert r[0, 0] == W3_GRAM[0, 0]
    assert solve_xi(r).charge == -30
    # first branch at (1,2): g22 is fixed
    g = GramMatrix.rank2(2, 3, -1)
    a = ((2, -1), (-1, 2))
    assert 2 * g[0, 1] == a[0][1] * g[0, 0]
    assert reflect_gram(g, a, 0)[1, 1] == g[1, 1]


def test_branches():
    assert set(check_cartan_log(W3_GRAM, A2).values()) == {"first"}
    br = check_cartan_log(COSET_GRAM, A2)
    assert br[(0, 1)] == "second" and br[(1, 0)] == "first"
    assert check_cartan_log(GramMatrix.rank2(3, 3, "1/7"), A2)[(0, 1)] == "neither"


def test_invariance_examples():
    rep = verify_invariance(W3_GRAM, A2)
    assert rep.ok and set(rep.reflected.values()) == {-30}
    rep = verify_invariance(COSET_GRAM, A2)
    assert rep.ok and set(rep.reflected.values()) == {-28}
    bad = GramMatrix.rank2(3, 3, "1/7")
    rep = verify_invariance(bad, A2)
    assert not rep.expected_invariant and not rep.invariant


def test_defect_formula_matches_reflection(rng):
    # the printed closed form for R1(c) - c
    for _ in range(100):
        g = rand_gram(rng, 6)
        if g[0, 0] == 0:
            continue
        a12 = -rng.randint(0, 3)
        a = ((2, a12), (-1, 2))
        try:
            c1 = solve_xi(reflect_gram(g, a, 0)).charge
        except DegenerateMomenta:
            continue
        assert c1 - solve_xi(g).charge == rank2_defect(g, a12)


def test_strict_invariance_raises_only_on_admissible_pairs(monkeypatch):
    import nicholscc.charge as ch
    real = ch.solve_xi
    calls = []

    def broken(g):
        s = real(g)
        calls.append(1)
        return s if len(calls) == 1 else type(s)(s.x, s.xi_norm, s.charge + 1)
    monkeypatch.setattr(ch, "solve_xi", broken)
    with pytest.raises(InvarianceFailure):
        ch.verify_invariance(W3_GRAM, A2)


def test_enumerate_coset_items_only_regular():
    for iid in ("2.2", "3.1"):
        recs = enumerate_solutions(iid, {"int": 3, "order": (3, 6)})
        assert recs
        assert {(r["params"]["m"], r["params"]["n"]) for r in recs} == {(0, 0)}


def test_enumerate_wb2_peculiar_families():
    recs = enumerate_solutions("2.4.1", {"int": 3, "order": (3, 5)})
    peculiar = {r["params"]["p"] for r in recs if r["class"] == "peculiar"}
    assert peculiar == {4, -4}
    assert any(r["class"] == "regular" for r in recs)
    assert not any(r["charge_mismatch"] for r in recs)


def test_enumerate_is_sorted():
    recs = enumerate_solutions("2.1", {"int": 1, "order": (3, 4)})
    keys = [tuple(r["params"].values()) for r in recs]
    assert keys == sorted(keys)


def test_fkw_examples():
    assert fkw_charge(*LIE_DATA["B2"], k=-2) == -4
    ell, h, r2, v2, rv = LIE_DATA["A2"]
    assert fkw_charge(ell, h, r2, v2, rv, 1 - h) == ell + 24 * rv - 12 * v2 - 12 * r2
    assert fkw_charge(*LIE_DATA["G2"], k=-3) == -30
    with pytest.raises(PoleAtCriticalLevel):
        fkw_charge(*LIE_DATA["A2"], k=-3)


def test_fkw_closed_forms():
    for k in (F(1, 3), F(-5, 2), F(7), F(2, 9)):
        assert fkw_charge(*LIE_DATA["A2"], k=k) == 50 - 24 / (k + 3) - 24 * (k + 3)
        assert fkw_charge(*LIE_DATA["B2"], k=k) == 86 - 60 * (k + 3) - 30 / (k + 3)
        assert fkw_charge(*LIE_DATA["G2"], k=k) == 194 - 168 * (k + 4) - 56 / (k + 4)
        assert fkw_charge(*LIE_DATA["G2_printed"], k=k) == 194 - 56 * (k + 4) - 168 / (k + 4)


def test_gram_json_round_trip():
    assert GramMatrix.from_json(W3_GRAM.to_json()) == W3_GRAM
    assert GramMatrix.from_json(str(W3_GRAM)) == W3_GRAM
    with pytest.raises(ValueError):
        GramMatrix.rank2(1, 2, 3).__class__(((1, 2), (3, 4)))


def test_braiding_lift():
    b = W3_GRAM.braiding()
    assert [str(x) for x in b.diagonal()] == ["1/3", "1/3"]
    assert str(b.monodromy(0, 1)) == "2/3"
