from fractions import Fraction as F

import pytest

from nicholscc import nichols
from nicholscc.braiding import BraidingMatrix, weyl_orbit
from nicholscc.catalog import expected_dimension, get_item, presentation_braiding
from nicholscc.errors import DegreeCapExceeded
from nicholscc.exact import CyclotomicNumber, exact_rank
from nicholscc.nichols import (BraidedSpace, Unbounded, brute_symmetrizer, hilbert_series,
                               is_palindromic, nichols_dimension, q_commutator, shuffle_rank,
                               symmetrizer_rank, vanishes_in_nichols)


def one_dim(t):
    return BraidedSpace(BraidingMatrix((((t,),))))


def space(iid, **params):
    return BraidedSpace(presentation_braiding(iid, params))


def compositions(n, theta=2):
    return [(k, n - k) for k in range(n + 1)] if theta == 2 else [(n,)]


def test_symmetrizer_examples():
    assert symmetrizer_rank(one_dim("1/2"), (2,)) == 0
    v = one_dim("1/3")
    assert symmetrizer_rank(v, (2,)) == 1 and symmetrizer_rank(v, (3,)) == 0
    # S_2 on {12, 21} is [[1, q12], [q21, 1]] with det 1 - q12 q21 = 2
    assert symmetrizer_rank(space("2.1", p=2), (1, 1)) == 2
    assert symmetrizer_rank(BraidedSpace(BraidingMatrix.rank2("1/2", "1/2", "0")), (1, 1)) == 1


def test_shuffle_examples():
    assert shuffle_rank(one_dim("1/2"), (2,)) == 0
    assert shuffle_rank(one_dim("1/5"), (1,)) == 1


def test_brute_force_oracle(rng):
    for _ in range(25):
        n = rng.choice([2, 3, 4, 5, 6])
        b = BraidingMatrix.rank2(*(F(rng.randrange(n), n) for _ in range(3)))
        v = BraidedSpace(b)
        for d in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (0, 3)]:
            assert symmetrizer_rank(v, d) == exact_rank(brute_symmetrizer(v, d))


@pytest.mark.parametrize("iid,p", [("2.2", 3), ("2.1", 3)])
def test_shuffle_matches_symmetrizer(iid, p):
    v = space(iid, p=p)
    for n in range(1, 7):
        for d in compositions(n):
            assert shuffle_rank(v, d) == symmetrizer_rank(v, d)


def test_hilbert_series_examples():
    assert hilbert_series(one_dim("1/2")) == [1, 1, 0]
    dims = hilbert_series(space("2.1", p=2))
    assert dims == [1, 2, 2, 2, 1, 0] and sum(dims) == 8
    assert is_palindromic(dims)


@pytest.mark.parametrize("iid,params,want", [("2.1", {"p": 2}, 8), ("2.2", {"p": 3}, 12),
                                             ("3.1", {"p": 3}, 12)])
def test_dimensions(iid, params, want):
    assert nichols_dimension(space(iid, **params)) == want == expected_dimension(iid, params)


def test_unbounded():
    # q = 1 in rank one: the symmetric algebra, never zero
    assert nichols_dimension(one_dim("0"), cap=5) == Unbounded(5)


def test_caps():
    v = BraidedSpace(BraidingMatrix.rank2("0", "0", "0"), degree_cap=4)
    with pytest.raises(DegreeCapExceeded):
        v.dim((3, 2))
    v = BraidedSpace(BraidingMatrix.rank2("0", "0", "0"), component_cap=10)
    with pytest.raises(DegreeCapExceeded):
        v.dim((3, 3))


def test_q_commutator_trivial_monodromy():
    b = BraidingMatrix((("1/3", "1/4"), ("3/4", "1/5")))
    v = BraidedSpace(b)
    e = q_commutator(v, "[1,2]")
    n = v.n
    assert e.terms == {(0, 1): CyclotomicNumber.rational(n, 1),
                       (1, 0): -CyclotomicNumber.from_angle(b[0, 1], n)}


def test_q_commutator_item_21_golden():
    # twist representative q12 = zeta^2, q21 = 1, zeta = e^{2 pi i/3}:
    # [1,[1,2]] = 112 - (1 + zeta^2) 121 + zeta^2 211
    v = space("2.1", p=3)
    z2 = CyclotomicNumber.root(3, 2)
    one = CyclotomicNumber.rational(3, 1)
    e = q_commutator(v, "[1,1,2]")
    assert e.terms == {(0, 0, 1): one, (0, 1, 0): -(one + z2), (1, 0, 0): z2}
    assert q_commutator(v, "1^2").terms == {(0, 0): one}


def test_vanishing_examples():
    assert vanishes_in_nichols(one_dim("1/2"), "1^2")
    assert vanishes_in_nichols(space("2.2", p=3), "[1,2,2]")
    assert not vanishes_in_nichols(space("2.4.1", p=5), "[1,1,2]")


def sub_elements(gen):
    """Maximal proper pieces of a generator: x^(N-1) for a power, the two
    bracket arguments for a commutator (single letters skipped)."""
    if "^" in gen:
        base, k = gen.rsplit("^", 1)
        return [f"{base}^{int(k) - 1}"] if int(k) > 1 else []
    spec = nichols.nest(eval(gen))
    return [nichols.spec_text(s) for s in spec if not isinstance(s, int)]


@pytest.mark.parametrize("iid,params", [("2.1", {"p": 2}), ("2.1", {"p": 3}), ("2.2", {"p": 3}),
                                        ("2.2", {"p": 4}), ("3.1", {"p": 3}), ("3.2.2", {})])
def test_generators_vanish_and_prefixes_do_not(iid, params):
    v = space(iid, **params)
    for gen in get_item(iid).presentation.generators(params):
        assert vanishes_in_nichols(v, gen), gen
        for sub in sub_elements(gen):
            assert not vanishes_in_nichols(v, sub), (gen, sub)


def test_orbit_dimension_invariance():
    b = presentation_braiding("2.2", {"p": 3})
    dims = {nichols_dimension(BraidedSpace(o.braiding)) for o in weyl_orbit(b)}
    assert dims == {12}


def test_lyndon_bracketing():
    assert nichols.nest([1, 1, 2]) == [1, [1, 2]]
    assert nichols.nest([1, 2, 2]) == [[1, 2], 2]
    assert nichols.nest([1, 1, 2, 1, 2]) == [[1, [1, 2]], [1, 2]]
    assert len(nichols.bracket_nestings([1, 2, 3, 4])) == 5
