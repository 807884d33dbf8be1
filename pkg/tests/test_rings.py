from fractions import Fraction

import pytest
from hypothesis import given

from hermite2.rings import (
    SQRT2, CoeffRing, QuadExt, RingError, coerce, factorial, format_rational, gamma_int,
    narrow, parse_rational, quad_mul, scalar_from_json, scalar_to_json, to_float,
)

from conftest import fractions, quads, small_ints


def test_factorial_small():
    assert factorial(0) == 1
    assert factorial(5) == 120


def test_factorial_20_against_iterated_product():
    acc = 1
    for i in range(2, 21):
        acc *= i
    assert acc == 2432902008176640000
    assert factorial(20) == acc


def test_factorial_negative():
    with pytest.raises(ValueError):
        factorial(-1)


@pytest.mark.parametrize("s,expected", [(1, 1), (4, 6), (7, factorial(6))])
def test_gamma_int(s, expected):
    assert gamma_int(s) == expected


@pytest.mark.parametrize("s", [0, -3])
def test_gamma_int_domain(s):
    with pytest.raises(ValueError):
        gamma_int(s)


def test_quad_mul_examples():
    assert quad_mul(SQRT2, SQRT2) == QuadExt(2, 0)
    assert quad_mul(QuadExt(1, 1), QuadExt(1, -1)) == QuadExt(-1, 0)
    # (1/2 + r) * 3 expanded by hand
    assert quad_mul(QuadExt(Fraction(1, 2), 1), QuadExt(3, 0)) == QuadExt(Fraction(3, 2), 3)


@given(quads, quads, quads)
def test_quad_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r


@given(fractions, fractions, fractions)
def test_rational_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a.denominator > 0


@given(fractions)
def test_rational_normalisation_idempotent(a):
    again = Fraction(a.numerator, a.denominator)
    assert (again.numerator, again.denominator) == (a.numerator, a.denominator)


@given(quads)
def test_quad_zero_test_componentwise(p):
    assert p.is_zero() == (p.a == 0 and p.b == 0)
    assert (p - p).is_zero()
    if not p.is_zero():
        assert p * p.inverse() == QuadExt(1)


@given(small_ints, small_ints)
def test_quad_to_float_within_4_ulp(a, b):
    import math
    p = QuadExt(a, b)
    ref = a + b * 1.4142135623730951
    assert abs(to_float(p) - ref) <= 4 * math.ulp(ref or 1.0)


def test_serialisation_roundtrip():
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(4) == "4"
    assert parse_rational("0.5") == Fraction(1, 2)
    obj = scalar_to_json(QuadExt(Fraction(1, 2), -3))
    assert obj == {"a": "1/2", "b": "-3"}
    assert scalar_from_json(obj, CoeffRing.QUAD) == QuadExt(Fraction(1, 2), -3)


def test_promotion_is_one_directional():
    assert coerce(3, CoeffRing.QUAD) == QuadExt(3)
    with pytest.raises(RingError):
        coerce(Fraction(1, 2), CoeffRing.INT)
    with pytest.raises(RingError):
        coerce(SQRT2, CoeffRing.RAT)
    assert narrow(QuadExt(4, 0), CoeffRing.INT) == 4
    with pytest.raises(RingError):
        narrow(SQRT2, CoeffRing.INT)
