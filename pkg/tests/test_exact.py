import cmath
from fractions import Fraction as F

import pytest

from nicholscc.errors import SingularMatrix
from nicholscc.exact import (CyclotomicNumber, RationalAngle, angle_mul, exact_rank,
                             exact_solve, format_rational, is_primitive_root, matvec,
                             nullspace, parse_rational, transpose)


def z(n, k=1):
    return CyclotomicNumber.root(n, k)


def numeric(x):
    """Independent evaluation through complex floats."""
    w = cmath.exp(2j * cmath.pi / x.n)
    return sum(float(c) * w ** k for k, c in enumerate(x.c))


@pytest.mark.parametrize("a,b,want", [("1/2", "1/2", "0"), ("1/3", "1/3", "2/3"),
                                      ("1/3", "3/4", "1/12")])
def test_angle_mul(a, b, want):
    assert angle_mul(RationalAngle.parse(a), RationalAngle.parse(b)) == RationalAngle.parse(want)


@pytest.mark.parametrize("a,ell,want", [("1/2", 2, True), ("2/4", 4, False), ("5/12", 12, True)])
def test_is_primitive_root(a, ell, want):
    assert is_primitive_root(RationalAngle.parse(a), ell) is want


def test_angles_form_a_group(rng):
    for _ in range(100):
        a = RationalAngle(F(rng.randint(-30, 30), rng.randint(1, 30)))
        b = RationalAngle(F(rng.randint(-30, 30), rng.randint(1, 30)))
        assert angle_mul(a, b) == angle_mul(b, a)
        assert angle_mul(a, a.inverse()).is_one()
        assert a.inverse().t == (1 - a.t) % 1
        assert 0 <= a.t < 1


def test_angle_text_is_lowest_terms():
    assert str(RationalAngle.parse("6/8")) == "3/4"
    assert str(RationalAngle.parse("-1/5")) == "4/5"


def test_rational_text_round_trip():
    for s in ("0", "-3", "7/12", "-5/2"):
        assert format_rational(parse_rational(s)) == s


def test_rank_examples():
    assert exact_rank([[1, 0], [0, 1]]) == 2
    assert exact_rank([[z(3, 0), z(3)], [z(3, 2), z(3, 0)]]) == 1
    one = CyclotomicNumber.rational(4, 1)
    # det = (1+i)(1-i) - 1 = 1
    assert exact_rank([[one + z(4), one], [one, one - z(4)]]) == 2


def test_rank_of_transpose(rng):
    for _ in range(200):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = [[F(rng.randint(-3, 3), rng.randint(1, 3)) if rng.random() < 0.6 else F(0)
              for _ in range(c)] for _ in range(r)]
        assert exact_rank(m) == exact_rank(transpose(m))


def test_cyclotomic_rank_matches_numeric_determinant(rng):
    for _ in range(40):
        n = rng.choice([3, 4, 5, 8, 12])
        m = [[z(n, rng.randrange(n)) + z(n, rng.randrange(n)) for _ in range(2)] for _ in range(2)]
        det = numeric(m[0][0] * m[1][1] - m[0][1] * m[1][0])
        assert (exact_rank(m) == 2) == (abs(det) > 1e-9)


def test_cyclotomic_arithmetic_matches_complex(rng):
    for _ in range(100):
        n = rng.choice([3, 5, 7, 8, 9, 12, 15])
        a = CyclotomicNumber.from_group_ring(n, [rng.randint(-2, 2) for _ in range(n)])
        b = CyclotomicNumber.from_group_ring(n, [rng.randint(-2, 2) for _ in range(n)])
        assert abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-8
        assert abs(numeric(a + b) - (numeric(a) + numeric(b))) < 1e-8
        if b:
            assert a / b * b == a


def test_embedding_preserves_arithmetic(rng):
    for _ in range(100):
        n = rng.choice([3, 4, 5, 6])
        k = rng.choice([2, 3, 4])
        a = CyclotomicNumber.from_group_ring(n, [rng.randint(-2, 2) for _ in range(n)])
        b = CyclotomicNumber.from_group_ring(n, [rng.randint(-2, 2) for _ in range(n)])
        m = k * n
        assert (a * b).embed(m) == a.embed(m) * b.embed(m)
        assert (a + b).embed(m) == a.embed(m) + b.embed(m)


def test_root_powers():
    acc = CyclotomicNumber.rational(5, 1)
    for _ in range(5):
        acc = acc * z(5)
    assert acc == CyclotomicNumber.rational(5, 1)
    # 1 + zeta + ... + zeta^4 = 0
    s = CyclotomicNumber.rational(5, 0)
    for k in range(5):
        s = s + z(5, k)
    assert not s


def test_solve_examples():
    assert exact_solve([[1, 0], [0, 1]], [F(3), F(-1, 2)]) == [3, F(-1, 2)]
    g = [[F(2, 3), F(-1, 3)], [F(-1, 3), F(2, 3)]]
    assert exact_solve(g, [F(-2, 3), F(-2, 3)]) == [-2, -2]
    with pytest.raises(SingularMatrix):
        exact_solve([[1, 1], [1, 1]], [1, 2])


def test_solve_multiplies_back(rng):
    done = 0
    while done < 50:
        n = rng.randint(1, 4)
        a = [[F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]
        b = [F(rng.randint(-5, 5)) for _ in range(n)]
        if exact_rank(a) < n:
            continue
        assert matvec(a, exact_solve(a, b)) == b
        done += 1


def test_nullspace(rng):
    for _ in range(50):
        m = [[F(rng.randint(-2, 2)) for _ in range(4)] for _ in range(3)]
        ns = nullspace(m)
        assert len(ns) == 4 - exact_rank(m)
        for v in ns:
            assert not any(matvec(m, v))
