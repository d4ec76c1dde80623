import json
from fractions import Fraction as F

from nicholscc.charge import GramMatrix
from nicholscc.report import Check, Report, jsonable


def test_jsonable_is_exact_strings():
    assert jsonable(F(-3, 4)) == "-3/4"
    assert jsonable({"a": [1, F(2), True, None]}) == {"a": ["1", "2", True, None]}
    assert jsonable(GramMatrix.rank2(1, 2, 0))["g"] == [["1", "0"], ["0", "2"]]


def test_check_compares_exact_strings():
    assert Check("x", F(1, 2), F(2, 4)).passed
    assert not Check("x", F(1, 2), 0.5).passed
    assert Check("x", 1, 2, passed=True).passed


def test_report():
    rep = Report("demo", {"p": 3})
    rep.check("one", 1, 1)
    assert rep.ok
    rep.check("two", 2, 3)
    assert not rep.ok and [c.name for c in rep.failures()] == ["two"]
    data = json.loads(rep.dumps())
    assert data["pass"] is False and data["checks"][1] == {
        "name": "two", "expected": "2", "actual": "3", "pass": False}
    assert rep.text().splitlines()[0] == "demo: FAIL"
