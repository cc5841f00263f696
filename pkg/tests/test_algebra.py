from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from interlace.algebra import (
    BETA,
    SQRT2,
    BiPoly,
    DuplicateNodeError,
    QSqrt2,
    UniPoly,
    lagrange_interpolate,
    parse_rational,
    poly_eval_bi,
    qs2_inv,
    qs2_mul,
)

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
elements = st.builds(QSqrt2, small_rationals, small_rationals)
nonzero = elements.filter(lambda a: a != 0)


def as_float(a: QSqrt2) -> float:
    return float(a.rat) + float(a.irr) * 2 ** 0.5


def test_mul_examples():
    x = QSqrt2(Fraction(3, 7), -2)
    assert qs2_mul(SQRT2, SQRT2) == QSqrt2(2, 0)
    assert qs2_mul(QSqrt2(1), x) == x
    assert qs2_mul(QSqrt2(1, 1), QSqrt2(1, -1)) == QSqrt2(-1, 0)


def test_inverse_examples():
    assert qs2_inv(QSqrt2(2)) == QSqrt2(Fraction(1, 2))
    assert qs2_inv(SQRT2) == QSqrt2(0, Fraction(1, 2)) == BETA
    assert qs2_inv(QSqrt2(1, 1)) == QSqrt2(-1, 1)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        qs2_inv(QSqrt2(0))


def test_canonical_strings():
    assert str(QSqrt2(Fraction(3, 2))) == "3/2"
    assert str(QSqrt2(1, -1)) == "(1-1*s)"
    assert str(QSqrt2(0, -1)) == "(-1*s)"
    assert str(QSqrt2(0, 2)) == "(2*s)"
    assert str(QSqrt2(Fraction(37, 4), -3)) == "(37/4-3*s)"


def test_parse_rational():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational("7") == 7
    with pytest.raises(ValueError):
        parse_rational("x")
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


def test_sign_is_exact_near_zero():
    # 99/70 is a close rational approximation of sqrt 2
    assert QSqrt2(Fraction(99, 70), -1).sign() == 1
    assert QSqrt2(Fraction(-99, 70), 1).sign() == -1
    assert QSqrt2(Fraction(140, 99), -1).sign() == -1


@given(elements, elements, elements)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0 and a + 0 == a and a * 1 == a


@given(nonzero)
def test_inverse_property(a):
    assert a * a.inverse() == 1
    assert a / a == 1
    assert a ** -2 * a ** 2 == 1


@given(elements, elements)
def test_normal_form_and_order(a, b):
    for v in (a + b, a * b):
        for part in (v.rat, v.irr):
            assert part.denominator > 0
            assert Fraction(part.numerator, part.denominator) == part
    gap = as_float(b) - as_float(a)
    if abs(gap) > 1e-9:
        assert (a < b) == (gap > 0)
    assert abs(a).sign() >= 0
    assert hash(a) == hash(QSqrt2(a.rat, a.irr))


def test_rational_elements_hash_like_fractions():
    assert hash(QSqrt2(Fraction(1, 3))) == hash(Fraction(1, 3))
    assert QSqrt2(Fraction(1, 3)) == Fraction(1, 3)
    assert {QSqrt2(2): "a"}[QSqrt2(2)] == "a"


def test_poly_eval_bi_examples():
    q_k2 = BiPoly({(2, 0): 1, (1, 0): -2, (0, 1): 2}, ("x", "y"))
    p_k2 = BiPoly({(0, 0): 1, (0, 1): 2, (2, 2): 1}, ("u", "x"))
    assert poly_eval_bi(BiPoly({}), 3, 4) == 0
    assert poly_eval_bi(q_k2, 2, 1) == 2
    assert poly_eval_bi(p_k2, 1, 1) == 4


def test_poly_strings():
    assert str(BiPoly({(0, 0): 1, (0, 1): 2, (2, 2): 1}, ("u", "x"))) == "u^2*x^2 + 2*x + 1"
    assert str(UniPoly({}, "x")) == "0"
    assert str(UniPoly({2: 1, 1: 3, 0: 1}, "x")) == "x^2 + 3*x + 1"


def test_lagrange_examples():
    assert lagrange_interpolate([(0, 1), (1, 2), (2, 5)]) == UniPoly({2: 1, 0: 1})
    assert lagrange_interpolate([(SQRT2, 7)]) == UniPoly.constant(7)
    with pytest.raises(DuplicateNodeError):
        lagrange_interpolate([(1, 2), (1, 3)])


@given(st.lists(elements, min_size=1, max_size=17), st.integers(0, 3))
def test_interpolation_round_trip(coeffs, extra):
    p = UniPoly.from_coeffs(coeffs, "x")
    count = len(coeffs) + extra
    nodes = [QSqrt2(i, Fraction(i, 3)) for i in range(count)]
    assert lagrange_interpolate([(v, p(v)) for v in nodes]) == p


@given(st.lists(elements, max_size=6), st.lists(elements, max_size=6), elements)
def test_unipoly_arithmetic_is_exact(a, b, v):
    p, q = UniPoly.from_coeffs(a), UniPoly.from_coeffs(b)
    assert (p + q)(v) == p(v) + q(v)
    assert (p * q)(v) == p(v) * q(v)
    assert (p * 3)(v) == 3 * p(v)
    assert p.compose(q)(v) == p(q(v))


@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), small_rationals, max_size=6),
       elements, elements)
def test_bipoly_substitute_matches_evaluation(terms, s, t):
    p = BiPoly(terms, ("x", "y"))
    first = BiPoly({(1, 1): 1, (0, 0): 1}, ("u", "x"))
    second = BiPoly({(0, 1): 1, (0, 0): 1}, ("u", "x"))
    assert p.substitute(first, second).evaluate(s, t) == p.evaluate(s * t + 1, t + 1)
    assert (p * p).evaluate(s, t) == p.evaluate(s, t) ** 2
