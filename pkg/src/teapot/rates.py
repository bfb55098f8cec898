"""Growth rates of tent maps: exact slopes in (1, 2].

A GrowthRate is either an exact rational (every Python float or decimal
string denotes one) or the leading root of an integer polynomial, isolated
by a Sturm bisection interval.  Orbit points live in Q or in the quotient
ring Q[z]/(p) and every branch decision of the tent map is made by exact
sign determination, so critical hits and periodicity are decided, never
guessed.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from . import _polyarith as pa

RateLike = Union["GrowthRate", int, float, Fraction, str]

_TWO = Fraction(2)
_ONE = Fraction(1)


class GrowthRate:
    """A tent-map slope lambda in (1, 2], represented exactly."""

    def __init__(self, *, rational=None, poly=None, interval=None):
        self._rational: Fraction | None = None
        self._poly: tuple[int, ...] | None = None
        if rational is not None:
            self._rational = Fraction(rational)
        else:
            self._poly = tuple(int(c) for c in poly)
            self._sqfree = pa.squarefree(pa.from_ints(self._poly))
            self._interval = [Fraction(interval[0]), Fraction(interval[1])]
            d = len(self._sqfree) - 1
            # reduction of z^d in Q[z]/(sqfree): z^d = sum(_red[i] z^i)
            self._red = [-c for c in self._sqfree[:-1]]
            self._dim = d
            self._refine_to(Fraction(1, 1 << 64))
            a, b = self._interval
            # collapse to rational storage when the isolated root is a small
            # rational: the simplest fraction in a width-2^-64 bracket equals
            # the root whenever its denominator is below ~2^32
            cand = a if a == b else ((a + b) / 2).limit_denominator(1 << 31)
            if a <= cand <= b and pa.evaluate(self._sqfree, cand) == 0:
                self._rational = cand
        if not (self.cmp(1) > 0 and self.cmp(2) <= 0):
            raise ValueError("growth rate must lie in (1, 2]")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, q) -> "GrowthRate":
        return cls(rational=Fraction(q))

    @classmethod
    def from_float(cls, x: float) -> "GrowthRate":
        """The exact dyadic rational the float denotes."""
        return cls(rational=Fraction(x))

    @classmethod
    def from_polynomial(cls, coeffs: Sequence[int]) -> "GrowthRate":
        """The largest real root in (1, 2] of an integer polynomial."""
        p = pa.from_ints(coeffs)
        if pa.degree(p) < 1:
            raise ValueError("polynomial must have degree >= 1")
        sf = pa.squarefree(p)
        located = pa.isolate_rightmost_root(sf, 1, 2)
        if located is None:
            raise ValueError("polynomial has no root in (1, 2]")
        if located[0] == "rational":
            rate = cls(rational=located[1])
        else:
            rate = cls(poly=coeffs, interval=(located[1], located[2]))
        rate._source_poly = tuple(int(c) for c in coeffs)
        return rate

    @classmethod
    def convert(cls, value: RateLike) -> "GrowthRate":
        if isinstance(value, GrowthRate):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, (int, Fraction)):
            return cls(rational=value)
        if isinstance(value, float):
            return cls.from_float(value)
        raise TypeError(f"cannot interpret {value!r} as a growth rate")

    @classmethod
    def parse(cls, text: str) -> "GrowthRate":
        """Parse 'poly:c0,c1,...,cd' (leading root) or an exact decimal literal."""
        text = text.strip()
        if text.startswith("poly:"):
            coeffs = [int(c) for c in text[5:].split(",")]
            return cls.from_polynomial(coeffs)
        return cls(rational=Fraction(text))

    # -- basic queries ------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self._rational is not None

    @property
    def rational_value(self) -> Fraction:
        if self._rational is None:
            raise ValueError("growth rate is not rational")
        return self._rational

    @property
    def defining_polynomial(self) -> tuple[int, ...] | None:
        if self._poly is not None:
            return self._poly
        return getattr(self, "_source_poly", None)

    @property
    def key(self):
        """Hashable exact identity (used for caching)."""
        if self._rational is not None:
            return ("q", self._rational)
        return ("p", self._poly)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GrowthRate) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def describe(self) -> str:
        if self._rational is not None:
            q = self._rational
            return str(q) if q.denominator != 1 else f"{q.numerator}"
        return "leading root of " + ",".join(str(c) for c in self._poly)

    def __repr__(self) -> str:
        return f"GrowthRate({self.describe()}, ~{self.value:.12f})"

    @property
    def value(self) -> float:
        """Double-precision approximation of the exact rate."""
        if self._rational is not None:
            return float(self._rational)
        self._refine_to(Fraction(1, 1 << 70))
        a, b = self._interval
        return float((a + b) / 2)

    # -- exact sign machinery (algebraic case) ------------------------

    def _refine_to(self, width: Fraction) -> None:
        a, b = self._interval
        sf = self._sqfree
        sa = pa.evaluate(sf, a)
        while b - a > width:
            m = (a + b) / 2
            vm = pa.evaluate(sf, m)
            if vm == 0:
                # exact hit: a zero-width interval makes every later
                # interval evaluation an exact point evaluation
                a = b = m
                break
            if (sa > 0) != (vm > 0):
                b = m
            else:
                a = m
                sa = vm
        self._interval = [a, b]

    def sign_at(self, q) -> int:
        """Exact sign of q(lambda) for q a Fraction-coefficient polynomial."""
        q = pa.trim(list(q))
        if not q:
            return 0
        if len(q) == 1:
            v = q[0]
            return (v > 0) - (v < 0)
        if self._rational is not None:
            v = pa.evaluate(q, self._rational)
            return (v > 0) - (v < 0)
        h = pa.poly_gcd(q, self._sqfree)
        if pa.degree(h) >= 1:
            # lambda is a root of exactly one of h, sqfree/h (coprime by
            # square-freeness); shrink until one of them is sign-definite.
            ht, _ = pa.poly_divmod(self._sqfree, h)
            while True:
                a, b = self._interval
                lo, hi = pa.interval_eval(h, a, b)
                if lo > 0 or hi < 0:
                    break  # q(lambda) != 0
                lo, hi = pa.interval_eval(ht, a, b)
                if lo > 0 or hi < 0:
                    return 0
                self._refine_to((b - a) / 2)
        while True:
            a, b = self._interval
            lo, hi = pa.interval_eval(q, a, b)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            self._refine_to((b - a) / 2)

    def cmp(self, q) -> int:
        """Sign of lambda - q for rational q."""
        q = Fraction(q)
        if self._rational is not None:
            d = self._rational - q
            return (d > 0) - (d < 0)
        return self.sign_at([-q, _ONE])

    def cmp_square(self, q) -> int:
        """Sign of lambda**2 - q for rational q."""
        q = Fraction(q)
        if self._rational is not None:
            d = self._rational * self._rational - q
            return (d > 0) - (d < 0)
        return self.sign_at([-q, Fraction(0), _ONE])

    # -- orbit element arithmetic -------------------------------------
    #
    # Elements of Q (rational rate) or Q[z]/(sqfree) are Fractions or
    # fixed-length Fraction lists; the tent orbit needs multiplication by
    # lambda, the affine map x -> 2 - x, and sign(x - 1).

    def one(self):
        if self._rational is not None:
            return _ONE
        return [_ONE] + [Fraction(0)] * (self._dim - 1)

    def mul_lambda(self, e):
        if self._rational is not None:
            return e * self._rational
        red = self._red
        top = e[-1]
        out = [Fraction(0)] + e[:-1]
        if top:
            for i in range(self._dim):
                if red[i]:
                    out[i] += top * red[i]
        return out

    def two_minus(self, e):
        if self._rational is not None:
            return _TWO - e
        return [_TWO - e[0]] + [-c for c in e[1:]]

    def sign_minus_one(self, e) -> int:
        if self._rational is not None:
            d = e - _ONE
            return (d > 0) - (d < 0)
        return self.sign_at([e[0] - _ONE] + list(e[1:]))

    def element_to_float(self, e) -> float:
        if self._rational is not None:
            return float(e)
        q = pa.trim(list(e))
        if not q:
            return 0.0
        while True:
            a, b = self._interval
            lo, hi = pa.interval_eval(q, a, b)
            mid = (lo + hi) / 2
            if hi - lo <= Fraction(1, 1 << 60) * max(1, abs(mid)):
                return float(mid)
            self._refine_to((b - a) / 2)

    # -- squaring (for the lambda < sqrt(2) reduction) -----------------

    def squared(self) -> "GrowthRate":
        """The growth rate lambda**2 (valid only when lambda**2 <= 2)."""
        if self._rational is not None:
            return GrowthRate(rational=self._rational * self._rational)
        p = pa.from_ints(self._poly)
        even = p[0::2]
        odd = p[1::2]
        q = _poly_sub(_poly_mul(even, even), _poly_shift(_poly_mul(odd, odd)))
        q_int = _clear_denominators(q)
        sf = pa.squarefree(pa.from_ints(q_int))
        while True:
            a, b = self._interval
            located = pa.isolate_rightmost_root(sf, a * a, b * b)
            if located is None:
                self._refine_to((b - a) / 2)
                continue
            if located[0] == "rational":
                return GrowthRate(rational=located[1])
            chain = pa.sturm_chain(sf)
            if pa.count_roots(chain, a * a, b * b) == 1:
                return GrowthRate(poly=q_int, interval=(located[1], located[2]))
            self._refine_to((b - a) / 2)


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return pa.trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return pa.trim(out)


def _poly_shift(a):
    return [Fraction(0)] + list(a) if a else []


def _clear_denominators(p) -> list[int]:
    from math import lcm

    if not p:
        return []
    den = 1
    for c in p:
        den = lcm(den, c.denominator)
    return [int(c * den) for c in p]
