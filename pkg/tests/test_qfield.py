"""Exact quadratic arithmetic: canonical forms, field ops, integer floors."""

import decimal
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hiccup.errors import DomainError
from hiccup.qfield import (
    QuadExt,
    ceil_q,
    discriminant,
    field_arith,
    floor_mul_sqrt,
    floor_q,
    isqrt,
    slope_r0,
)

SQRT2 = QuadExt(0, 1, 1, 2)
SQRT5 = QuadExt(0, 1, 1, 5)
PHI = QuadExt(1, 1, 2, 5)


# ------------------------------------------------------------ field ops

def test_conjugate_sum_is_rational():
    a = QuadExt(1, 1, 1, 2)
    b = QuadExt(1, -1, 1, 2)
    assert field_arith("add", a, b) == QuadExt(2)
    assert field_arith("add", a, b) == 2


def test_square_of_one_plus_sqrt2():
    a = QuadExt(1, 1, 1, 2)
    assert field_arith("mul", a, a) == QuadExt(3, 2, 1, 2)


def test_reciprocal_of_golden_ratio():
    inv = field_arith("div", QuadExt(1), PHI)
    assert inv == QuadExt(-1, 1, 2, 5)
    assert field_arith("mul", inv, PHI) == 1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        field_arith("div", QuadExt(1), QuadExt(0))


def test_mixed_radicands_rejected():
    with pytest.raises(DomainError):
        QuadExt(1, 1, 1, 2) + QuadExt(0, 1, 1, 3)
    # a rational side is compatible with anything
    assert QuadExt(2) + QuadExt(0, 1, 1, 3) == QuadExt(2, 1, 1, 3)


def test_unknown_op_rejected():
    with pytest.raises(DomainError):
        field_arith("pow", QuadExt(1), QuadExt(1))


# ---------------------------------------------------------- normalization

def test_canonical_forms():
    # square factors of the radicand fold into q: (2+sqrt(8))/2 == 1+sqrt(2)
    assert QuadExt(2, 1, 2, 8) == QuadExt(1, 1, 1, 2)
    # perfect-square radicand collapses to a rational
    assert QuadExt(0, 2, 1, 9) == 6
    assert QuadExt(0, 2, 1, 9).is_rational
    # common factors reduce
    assert QuadExt(4, 0, 2, 7) == 2
    # denominator sign normalizes positive
    assert QuadExt(-1, -1, -2, 5) == QuadExt(1, 1, 2, 5)
    assert QuadExt(-1, -1, -2, 5).den == 2


def test_equality_and_hash_with_rationals():
    assert QuadExt(3) == 3
    assert hash(QuadExt(3)) == hash(3)
    assert QuadExt(1, 0, 2) == Fraction(1, 2)
    assert hash(QuadExt(1, 0, 2)) == hash(Fraction(1, 2))
    assert QuadExt(1, 1, 1, 2) != QuadExt(1, 1, 1, 3)


def test_as_fraction():
    assert QuadExt(3, 0, 6).as_fraction() == Fraction(1, 2)
    with pytest.raises(DomainError):
        SQRT2.as_fraction()


# ------------------------------------------------------------------ isqrt

def test_isqrt_examples():
    assert isqrt(0) == 0
    assert isqrt(49) == 7
    # big-integer case; floor(sqrt(4e18+5)) is exactly 2*10^9 since
    # (2*10^9)^2 <= n < (2*10^9 + 1)^2
    n = 4 * 10**18 + 5
    r = isqrt(n)
    assert r == 2_000_000_000
    assert r * r <= n < (r + 1) * (r + 1)


@given(st.integers(0, 10**40))
@settings(max_examples=200, deadline=None)
def test_isqrt_defining_inequality(n):
    r = isqrt(n)
    assert r * r <= n < (r + 1) * (r + 1)


def test_floor_mul_sqrt():
    assert floor_mul_sqrt(3, 2) == 4    # 3*sqrt(2) = 4.24..
    assert floor_mul_sqrt(-3, 2) == -5  # floor goes down for inexact negatives
    assert floor_mul_sqrt(-2, 4) == -4  # exact negative stays put
    assert floor_mul_sqrt(0, 5) == 0


# ------------------------------------------------------------------ floor

def test_floor_examples():
    assert floor_q(QuadExt(3)) == 3
    assert floor_q(QuadExt(0, 2, 2, 5)) == 2  # sqrt(5) = 2.236..
    # 2*r_B - sqrt(5) with r_B = (3+sqrt 5)/2 is exactly the integer 3
    r_b = slope_r0(2, 3)
    probe = QuadExt(2) * r_b - SQRT5
    assert probe == 3
    assert floor_q(probe) == 3
    assert ceil_q(probe) == 3


def test_floor_negative_values():
    assert floor_q(-SQRT2) == -2
    assert ceil_q(-SQRT2) == -1
    assert floor_q(SQRT2 - 1) == 0
    assert math.floor(SQRT2) == 1  # __floor__ protocol
    assert math.ceil(SQRT2) == 2


def test_floor_matches_high_precision_decimal():
    # 10^4 seeded random values, checked against 50-digit arithmetic
    rng = random.Random(20260819)
    nonsquares = [2, 3, 5, 6, 7, 10, 13, 21, 101, 9973]
    for _ in range(10_000):
        v = QuadExt(
            rng.randint(-10**6, 10**6),
            rng.randint(-10**6, 10**6),
            rng.randint(1, 1000),
            rng.choice(nonsquares),
        )
        d = v.to_decimal(50)
        want = int(d.to_integral_value(rounding=decimal.ROUND_FLOOR))
        assert floor_q(v) == want, v


def test_double_precision_is_boundary_fragile():
    # k*(3+sqrt5) - k*sqrt5 == 3k exactly; the double-precision route
    # misfloors for some k while the integer route never does
    r2b = 3 + math.sqrt(5.0)
    fragile = []
    for k in range(1, 200):
        v = QuadExt(k) * QuadExt(3, 1, 1, 5) - QuadExt(0, k, 1, 5)
        assert v == 3 * k
        assert floor_q(v) == 3 * k
        if math.floor(k * r2b - k * math.sqrt(5.0)) != 3 * k:
            fragile.append(k)
    assert fragile, "expected at least one double-precision misfloor"
    assert 9 in fragile  # floor comes out 26 instead of 27


# ------------------------------------------------------------ slopes

def test_slope_r0_examples():
    assert slope_r0(3, 2) == QuadExt(1, 1, 1, 2)          # (2+sqrt8)/2 folds
    assert slope_r0(1, 2) == 1                            # discriminant 0
    assert slope_r0(1, 2).is_rational
    assert slope_r0(2, 3) == QuadExt(3, 1, 2, 5)


def test_discriminant_examples():
    assert discriminant(1, 2) == 0
    assert discriminant(1, 4) == 4
    assert discriminant(0, 4) == 0
    assert discriminant(3, 2) == 8
    assert discriminant(0, 3) == -3
    with pytest.raises(DomainError):
        slope_r0(0, 3)


def test_slope_root_property():
    # r0 is the positive root of t^2 - z t - (y - z)
    for y in range(0, 21):
        for z in range(0, 21):
            if discriminant(y, z) < 0 or (y == 0 and z == 0):
                continue
            r = slope_r0(y, z)
            lhs = field_arith("mul", r, r)
            rhs = field_arith("add", QuadExt(z) * r, QuadExt(y - z))
            assert lhs == rhs, (y, z)


def test_slope_bracketing_is_exact():
    # Z < r_A < Z+1 and Z < r_B < Z+1, exact comparisons
    for Z in range(2, 21):
        r_a = slope_r0(Z + 1, Z)
        r_b = slope_r0(Z, Z + 1)
        assert QuadExt(Z) < r_a < QuadExt(Z + 1)
        assert QuadExt(Z) < r_b < QuadExt(Z + 1)
        assert r_a != r_b


# ----------------------------------------------------- algebraic axioms

qints = st.integers(-50, 50)
qden = st.integers(1, 20)


def _val(p, q, den, d=5):
    return QuadExt(p, q, den, d)


@given(p1=qints, q1=qints, n1=qden, p2=qints, q2=qints, n2=qden,
       p3=qints, q3=qints, n3=qden)
@settings(max_examples=150, deadline=None)
def test_field_axioms(p1, q1, n1, p2, q2, n2, p3, q3, n3):
    a, b, c = _val(p1, q1, n1), _val(p2, q2, n2), _val(p3, q3, n3)
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a + 0 == a and a * 1 == a
    if b != 0:
        assert (a / b) * b == a


@given(p=qints, q=qints, den=qden)
@settings(max_examples=100, deadline=None)
def test_conjugation_properties(p, q, den):
    v = _val(p, q, den)
    norm = v * v.conjugate()
    tr = v + v.conjugate()
    assert norm.is_rational
    assert tr.is_rational


@given(p=qints, q=qints, den=qden)
@settings(max_examples=100, deadline=None)
def test_floor_ceil_bracket(p, q, den):
    v = _val(p, q, den)
    f, c = floor_q(v), ceil_q(v)
    assert QuadExt(f) <= v < QuadExt(f + 1)
    assert QuadExt(c - 1) < v <= QuadExt(c)
    assert (f == c) == (v == f)


# -------------------------------------------------------------- numerics

def test_to_decimal_digits():
    d = SQRT2.to_decimal(50)
    assert str(d) == "1.4142135623730950488016887242096980785696718753769"


def test_float_conversion():
    assert abs(float(SQRT2) - math.sqrt(2.0)) < 1e-15


def test_ordering_against_rationals():
    assert SQRT2 < Fraction(3, 2)
    assert SQRT2 > 1
    assert PHI < 2
    assert sorted([PHI, QuadExt(2, 1, 1, 5), QuadExt(1)]) == [
        QuadExt(1),
        PHI,
        QuadExt(2, 1, 1, 5),
    ]
    # equality across fields is total, ordering is not
    assert PHI != SQRT2
    with pytest.raises(DomainError):
        PHI < SQRT2


def test_from_fraction():
    v = QuadExt.from_fraction(Fraction(22, 7))
    assert v == Fraction(22, 7)
    assert v.is_rational
