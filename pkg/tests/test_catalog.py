import json
from fractions import Fraction as F
from itertools import islice

import pytest

from nicholscc import catalog
from nicholscc.braiding import BraidingMatrix
from nicholscc.charge import GramMatrix, LIE_DATA, fkw_charge, solve_xi
from nicholscc.errors import NoChargeRecorded, NoPresentation, UnknownItem

SMALL = {"int": 2, "order": (3, 5)}


def sample_params(item, n=40):
    return list(islice(catalog._product(catalog._ranges(item, SMALL)), n))


def test_get_item_21():
    item = catalog.get_item("2.1")
    assert item.cartan_type == "A2"
    assert item.presentation.generators({"p": 3}) == ["[1,1,2]", "[1,2,2]", "1^3", "[1,2]^3", "2^3"]
    assert item.presentation.dimension_text == "p^3"


def test_conditions_only_item():
    item = catalog.get_item("5.3")
    assert item.conditions_only and not item.families
    assert "R_24" in item.conditions
    with pytest.raises(NoChargeRecorded):
        catalog.expected_charge("5.3", "regular", {})


def test_item_322_presentation():
    pres = catalog.get_item("3.2.2").presentation
    assert pres.generators({}) == ["[1,1,2,1,2]", "1^3", "2^2"]
    assert catalog.expected_dimension("3.2.2", {}) == 36


def test_unknown_item():
    with pytest.raises(UnknownItem):
        catalog.get_item("9.9")
    with pytest.raises(NoPresentation):
        catalog.expected_dimension("2.5", {})


def test_match_braiding():
    assert "2.1" in catalog.match_braiding(BraidingMatrix.rank2("1/3", "1/3", "2/3"))
    assert "2.2" in catalog.match_braiding(BraidingMatrix.rank2("1/2", "1/5", "4/5"))
    assert catalog.match_braiding(BraidingMatrix.rank2("1/7", "2/5", "0")) == ["1"]


def test_expected_charge_examples():
    assert catalog.expected_charge("2.1", "regular", {"p": 3, "j": 0}) == -30
    assert catalog.expected_charge("2.5", "regular", {"n": 0}) == 26
    # 1/p + j = -1/(k+1) gives k = -6 at p = 5
    assert catalog.expected_charge("4.1", "regular", {"p": 5, "j": 0}) == -51


def test_expected_dimension_examples():
    assert catalog.expected_dimension("2.1", {"p": 2}) == 8
    assert catalog.expected_dimension("2.2", {"p": 3}) == 12
    assert catalog.expected_dimension("2.4.1", {"p": 4}) == 64


def test_templates_round_trip_and_satisfy_conditions():
    checked = 0
    for iid in catalog.item_ids():
        item = catalog.get_item(iid)
        if item.template is None:
            continue
        for P in sample_params(item):
            P = catalog._unpack(dict(P))
            try:
                a, b, d = item.gram(P)
                t = item.template(P)
            except ZeroDivisionError:
                continue
            assert ((a / 2) % 1, (b / 2) % 1, d % 1) == tuple(F(x) % 1 for x in t), (iid, P)
            assert item.predicate(*(F(x) % 1 for x in t)), (iid, P)
            checked += 1
    assert checked > 300


def test_recorded_charges_agree_with_solver():
    for iid in catalog.item_ids():
        item = catalog.get_item(iid)
        if item.conditions_only or item.roots is not None:
            continue
        for r in catalog.enumerate_item(iid, SMALL):
            assert not r["charge_mismatch"], (iid, r["params"])


def test_regular_w3_family_by_hand():
    for p in range(2, 9):
        g = catalog.get_item("2.1").gram_matrix({"p": p, "m": 0, "n": 0, "j": 0})
        k3 = F(1, p)
        assert solve_xi(g).charge == 50 - 24 / k3 - 24 * k3


def test_item_31_duality():
    for p in range(3, 10):
        # k + 1 = 1/p at j = 0
        k = F(1, p) - 1
        assert F(1, p + 1) + 1 / (k + 2) == 1
        g = catalog.get_item("3.1").gram_matrix({"p": p, "m": 0, "n": 0, "j": 0})
        assert solve_xi(g).charge == 3 * k / (k + 2) - 1


def test_wb2_matches_fkw():
    for k in (F(1, 2), F(-7, 3), F(5), F(2, 11)):
        p = 1 / (k + 3)
        want = catalog.expected_charge("2.4.1", "regular", {"p": p, "j": 0})
        assert want == fkw_charge(*LIE_DATA["B2"], k=k)


def test_catalog_json_is_serializable():
    data = json.loads(json.dumps(catalog.catalog_json()))
    ids = [it["id"] for it in data["items"]]
    assert ids == catalog.item_ids()
    assert "2.1" in ids and "5.5" in ids
    rec = catalog.enumerate_item("2.2", {"int": 1, "order": (3, 3)})[0]
    assert json.loads(json.dumps(catalog.record_json(rec)))["gram"]["g"]


def test_gram_matrix_is_symmetric_gram():
    g = catalog.get_item("2.2").gram_matrix({"p": 5, "m": 0, "n": 0, "j": 0})
    assert isinstance(g, GramMatrix) and g == GramMatrix.rank2(1, "2/5", "-1/5")
