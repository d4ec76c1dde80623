from fractions import Fraction as F

import pytest

from nicholscc.errors import OutOfDomain
from nicholscc.freefield import (OCTUPLET_GOLDEN, Field, OctupletFields, mode_action, octuplet,
                                 octuplet_opes, screening_residue, unit)
from wick_oracle import naive_ope


@pytest.fixture(scope="module")
def oct2():
    return OctupletFields(2)


def test_structure_p2(oct2):
    rep = octuplet(2, oct2)
    assert rep.ok, [c.name for c in rep.failures()]
    fields = rep.outputs["fields"]
    assert all(fields[n]["weight"] == 4 for n in fields)
    assert fields["a"]["order"] == 1
    assert fields["ab"]["momentum"] == [0, 0] and fields["ba"]["momentum"] == [0, 0]


def test_opes_p2(oct2):
    rep = octuplet_opes(2, oct2)
    assert rep.ok, [c.name for c in rep.failures()]
    assert rep.outputs["coefficients"] == OCTUPLET_GOLDEN[2]


def test_w_is_killed_by_screenings_and_w0(oct2):
    g = oct2.g
    for i in range(2):
        assert not screening_residue(g, unit(2, i), oct2["W"])
    assert not mode_action(g, oct2.W3, 3, 0, oct2["W"])


def test_dashed_factor(oct2):
    assert oct2["aba"].ratio_to(oct2.Ea(oct2["ab"])) == F(1, 2)


def test_golden_values_from_the_naive_enumerator(oct2):
    p, g = 2, oct2.g.g
    top, h = 6 * p - 4, 3 * p - 2
    e = naive_ope(g, oct2["W"].terms, oct2["aabb"].terms, lowest=top)
    c1 = e[top][((), (0, 0))]
    e = naive_ope(g, oct2["a"].terms, oct2["b"].terms, lowest=h)
    c3 = Field(2, e[h]).ratio_to(oct2["W"])
    assert (c1, c3) == (OCTUPLET_GOLDEN[2]["c1"], OCTUPLET_GOLDEN[2]["c3"])


def test_out_of_domain():
    with pytest.raises(OutOfDomain):
        OctupletFields(1)
