"""Exact growth-rate arithmetic: parsing, sign determination, squaring."""
from __future__ import annotations

from fractions import Fraction

import pytest

from teapot.rates import GrowthRate

TRIBONACCI = [-1, -1, -1, 1]


def test_parse_decimal_is_exact_rational():
    r = GrowthRate.parse("1.82")
    assert r.is_rational and r.rational_value == Fraction(91, 50)
    assert GrowthRate.parse("2").rational_value == 2


def test_parse_polynomial_leading_root():
    r = GrowthRate.parse("poly:-1,-1,-1,1")
    assert not r.is_rational
    assert abs(r.value - 1.8392867552141612) < 1e-14


def test_float_means_its_exact_dyadic():
    r = GrowthRate.from_float(1.8)
    assert r.is_rational and r.rational_value == Fraction(1.8)


def test_range_validation():
    with pytest.raises(ValueError):
        GrowthRate.from_rational(Fraction(1))
    with pytest.raises(ValueError):
        GrowthRate.from_rational(Fraction(21, 10))
    with pytest.raises(ValueError):
        GrowthRate.from_polynomial([1, 0, 1])  # z^2 + 1: no real root
    with pytest.raises(ValueError):
        GrowthRate.from_polynomial([-9, 1])  # root 9, outside (1, 2]
    assert GrowthRate.from_rational(2).value == 2.0


def test_rational_roots_are_detected_exactly():
    assert GrowthRate.from_polynomial([-2, 1]).rational_value == 2
    assert GrowthRate.from_polynomial([-3, 2]).rational_value == Fraction(3, 2)
    # square factors are harmless
    assert GrowthRate.from_polynomial([9, -12, 4]).rational_value == Fraction(3, 2)


def test_sign_at_detects_algebraic_zero():
    r = GrowthRate.from_polynomial(TRIBONACCI)
    assert r.sign_at([Fraction(-1), Fraction(-1), Fraction(-1), Fraction(1)]) == 0
    assert r.sign_at([Fraction(-1), Fraction(1)]) == 1  # lambda - 1 > 0
    assert r.sign_at([Fraction(-2), Fraction(1)]) == -1  # lambda - 2 < 0


def test_cmp_helpers():
    r = GrowthRate.from_polynomial([-2, 0, 1])  # sqrt(2)
    assert r.cmp(1) > 0 and r.cmp(2) < 0
    assert r.cmp_square(2) == 0
    t = GrowthRate.from_polynomial(TRIBONACCI)
    assert t.cmp_square(2) > 0
    s = GrowthRate.from_rational(Fraction(13, 10))
    assert s.cmp_square(2) < 0


def test_squared():
    assert GrowthRate.from_rational(Fraction(13, 10)).squared().rational_value == Fraction(169, 100)
    r2 = GrowthRate.from_polynomial([-2, 0, 1]).squared()
    assert r2.is_rational and r2.rational_value == 2
    fourth = GrowthRate.from_polynomial([-2, 0, 0, 0, 1])  # 2**(1/4)
    sq = fourth.squared()
    assert abs(sq.value - 2 ** 0.5) < 1e-14
    assert abs(sq.squared().value - 2.0) < 1e-14
    # squaring is only defined up to the fundamental strip
    with pytest.raises(ValueError):
        GrowthRate.from_polynomial(TRIBONACCI).squared()


def test_orbit_element_ops_rational():
    r = GrowthRate.from_rational(Fraction(3, 2))
    x = r.one()
    t = r.mul_lambda(x)
    assert t == Fraction(3, 2)
    assert r.two_minus(t) == Fraction(1, 2)
    assert r.sign_minus_one(t) == 1
    assert r.element_to_float(t) == 1.5


def test_orbit_element_ops_algebraic():
    phi = GrowthRate.from_polynomial([-1, -1, 1])
    x = phi.one()
    x = phi.two_minus(phi.mul_lambda(x))  # 2 - phi
    x = phi.mul_lambda(x)  # phi(2 - phi) = phi - 1 = 1/phi
    assert phi.sign_minus_one(phi.mul_lambda(x)) == 0  # phi * 1/phi == 1
    assert abs(phi.element_to_float(x) - 0.6180339887498949) < 1e-15


def test_decimal_and_polynomial_spellings_agree():
    # the leading root of 5z - 9 collapses to the exact rational 9/5
    assert GrowthRate.from_polynomial([-9, 5]) == GrowthRate.parse("1.8")
    assert GrowthRate.from_polynomial([-9, 5]).is_rational


def test_equality_and_keys():
    assert GrowthRate.parse("1.82") == GrowthRate.from_rational(Fraction(91, 50))
    assert GrowthRate.parse("poly:-1,-1,-1,1") == GrowthRate.from_polynomial(TRIBONACCI)
    assert GrowthRate.parse("1.82") != GrowthRate.parse("1.83")
    assert len({GrowthRate.parse("1.82"), GrowthRate.from_rational(Fraction(91, 50))}) == 1
