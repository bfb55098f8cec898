"""Exact univariate polynomial arithmetic over the rationals.

Polynomials are lists of Fractions in ascending-degree order with nonzero
leading coefficient; the zero polynomial is the empty list.  Provides the
Euclidean toolkit (gcd, square-free part), Sturm chains, interval Horner
evaluation, and isolation of the rightmost real root in an interval --
everything the exact growth-rate layer needs to decide signs of algebraic
numbers.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Poly = list  # list[Fraction], ascending degree


def trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def from_ints(coeffs: Sequence[int]) -> Poly:
    return trim([Fraction(c) for c in coeffs])


def degree(p: Poly) -> int:
    return len(p) - 1


def evaluate(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Poly) -> Poly:
    return [i * c for i, c in enumerate(p)][1:]


def monic(p: Poly) -> Poly:
    if not p:
        return p
    lead = p[-1]
    return [c / lead for c in p]


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    while len(a) >= len(b) and trim(a):
        k = len(a) - len(b)
        f = a[-1] * inv
        q[k] = f
        for i, c in enumerate(b):
            a[k + i] -= f * c
        a = a[:-1]
        while a and a[-1] == 0 and len(a) >= len(b):
            a = a[:-1]
    return trim(q), trim(a)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    a, b = trim(list(a)), trim(list(b))
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    return monic(a)


def squarefree(p: Poly) -> Poly:
    p = trim(list(p))
    if degree(p) < 1:
        return monic(p)
    g = poly_gcd(p, derivative(p))
    if degree(g) < 1:
        return monic(p)
    q, _ = poly_divmod(p, g)
    return monic(q)


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [trim(list(p)), trim(derivative(p))]
    while chain[-1]:
        _, r = poly_divmod(chain[-2], chain[-1])
        chain.append([-c for c in r])
    chain.pop()
    return chain


def _variations(chain: list[Poly], x: Fraction) -> int:
    count = 0
    prev = 0
    for q in chain:
        v = evaluate(q, x)
        s = (v > 0) - (v < 0)
        if s != 0:
            if prev != 0 and s != prev:
                count += 1
            prev = s
    return count


def count_roots(chain: list[Poly], a: Fraction, b: Fraction) -> int:
    """Distinct real roots of chain[0] in the half-open interval (a, b]."""
    return _variations(chain, a) - _variations(chain, b)


def interval_eval(p: Poly, a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    """Exact interval Horner: bounds for {p(x) : a <= x <= b}."""
    if not p:
        return Fraction(0), Fraction(0)
    lo = hi = p[-1]
    for c in reversed(p[:-1]):
        ps = (lo * a, lo * b, hi * a, hi * b)
        lo, hi = min(ps) + c, max(ps) + c
    return lo, hi


def isolate_rightmost_root(p_sf: Poly, lo, hi):
    """Isolate the largest real root of square-free p_sf in (lo, hi].

    Returns ("rational", r) when that root is hit exactly, ("interval", a, b)
    with p_sf(a) * p_sf(b) < 0 and exactly one root inside, or None when
    there is no root in the interval.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if evaluate(p_sf, hi) == 0:
        return ("rational", hi)
    # a root exactly at the open left endpoint would break Sturm counting
    while evaluate(p_sf, lo) == 0:
        p_sf, _ = poly_divmod(p_sf, [-lo, Fraction(1)])
        if evaluate(p_sf, hi) == 0:
            return ("rational", hi)
    chain = sturm_chain(p_sf)
    if count_roots(chain, lo, hi) == 0:
        return None
    a, b = lo, hi
    while True:
        if count_roots(chain, a, b) == 1 and evaluate(p_sf, a) * evaluate(p_sf, b) < 0:
            return ("interval", a, b)
        m = (a + b) / 2
        if evaluate(p_sf, m) == 0:
            if count_roots(chain, m, b) == 0:
                return ("rational", m)
            a = m
        elif count_roots(chain, m, b) >= 1:
            a = m
        else:
            b = m
