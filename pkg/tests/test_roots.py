"""The Aberth solver, the exact leading-root path, and disk filtering."""
from __future__ import annotations

import random

import pytest

from teapot.atlas import admissible_words
from teapot.roots import all_roots, conjugates_in_disk, leading_root
from teapot.series import IntPolynomial, parry_polynomial

TRIBONACCI_CUBIC = IntPolynomial([-1, -1, -1, 1])
QUARTIC_1001 = IntPolynomial([1, 0, 0, -2, 1])
WITNESS = IntPolynomial([-1, 0, 1, 0, -1, 0, 1, -2, 3, -4, 3, -2, 1, -2, 1])


def test_quadratic_fixture():
    rs = all_roots(IntPolynomial([-1, 0, 1]))
    assert [round(r.real, 12) for r in rs.roots] == [-1.0, 1.0]
    assert all(r.imag == 0 for r in rs.roots)


def test_tribonacci_cubic():
    rs = all_roots(TRIBONACCI_CUBIC)
    real = [r for r in rs.roots if r.imag == 0]
    pair = [r for r in rs.roots if r.imag != 0]
    assert len(real) == 1 and len(pair) == 2
    assert abs(real[0].real - 1.8392867552141612) < 1e-12
    for r in pair:
        assert abs(abs(r) - 0.7373527057603276) < 1e-9
        assert abs(r - complex(-0.419643, 0.606291)) < 1e-5 or abs(
            r - complex(-0.419643, -0.606291)
        ) < 1e-5


def test_quartic_is_cubic_plus_unit_root():
    quartic = sorted(all_roots(QUARTIC_1001).roots, key=lambda r: (r.real, r.imag))
    cubic = sorted(
        list(all_roots(TRIBONACCI_CUBIC).roots) + [1 + 0j],
        key=lambda r: (r.real, r.imag),
    )
    assert all(abs(a - b) < 1e-10 for a, b in zip(quartic, cubic))


def test_leading_root_fixtures():
    assert abs(leading_root(QUARTIC_1001) - 1.8392867552141612) < 1e-12
    assert abs(leading_root(WITNESS) - 1.8149185987640513) < 1e-9
    assert leading_root(IntPolynomial([1, 0, 1])) is None
    assert leading_root(IntPolynomial([-2, 1])) == 2.0


def test_witness_conjugate_root():
    target = complex(-0.5840341196392905, 0.4820600149798202)
    rs = all_roots(WITNESS)
    assert min(abs(r - target) for r in rs.roots) < 1e-6


def test_vieta_sums_and_products():
    rng = random.Random(9)
    polys = [TRIBONACCI_CUBIC, QUARTIC_1001, WITNESS]
    for _ in range(20):
        cs = [rng.choice([-2, -1, 1, 2]) for _ in range(rng.randint(2, 12))]
        polys.append(IntPolynomial(cs + [1]))
    for p in polys:
        rs = all_roots(p)
        c = p.coefficients
        d = p.degree
        s = sum(rs.roots)
        prod = 1 + 0j
        for r in rs.roots:
            prod *= r
        assert abs(s - (-c[d - 1] / c[d])) < 1e-8 * (1 + abs(s))
        assert abs(prod - (-1) ** d * c[0] / c[d]) < 1e-8 * (1 + abs(prod))
        assert max(rs.residuals) <= 1e-10


def test_all_roots_handles_zero_roots_and_validates_count():
    rs = all_roots(IntPolynomial([0, 0, -1, 1]))
    assert len(rs) == 3
    assert sorted(abs(r) for r in rs.roots) == [0.0, 0.0, 1.0]
    with pytest.raises(ValueError):
        all_roots(IntPolynomial([5]))


def test_leading_roots_of_admissible_words():
    # in (1, 2] except for the zero-entropy degenerates, whose roots all lie
    # on the unit circle (high multiplicity smears them by ~eps^(1/m))
    for w in admissible_words(12):
        p = parry_polynomial(w)
        lr = leading_root(p)
        if lr is None:
            assert all(abs(abs(r) - 1) < 1e-2 for r in all_roots(p).roots), w
        else:
            assert 1 < lr <= 2, w


def test_exact_and_float_routes_agree():
    for w in admissible_words(10):
        p = parry_polynomial(w)
        lr = leading_root(p)
        if lr is None:
            continue
        aberth = max(
            (r.real for r in all_roots(p).roots if r.imag == 0 and r.real > 1),
            default=None,
        )
        assert aberth is not None
        assert abs(aberth - lr) < 1e-10, w


def test_conjugates_in_disk():
    target = complex(-0.5840341196392905, 0.4820600149798202)
    inside = conjugates_in_disk(WITNESS, 1.0)
    assert min(abs(r - target) for r in inside) < 1e-6
    assert all(abs(r) <= 1 + 1e-8 for r in inside)
    quartic_disk = conjugates_in_disk(QUARTIC_1001, 1.0)
    assert len(quartic_disk) == 3  # the complex pair plus z = 1 on the boundary
    assert any(abs(r - 1) < 1e-10 for r in quartic_disk)
    assert conjugates_in_disk(QUARTIC_1001, 0.0) == []


def test_determinism():
    a = all_roots(WITNESS)
    b = all_roots(WITNESS)
    assert a.roots == b.roots and a.residuals == b.residuals
