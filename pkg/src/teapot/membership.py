"""Certified complement tests for teapot slices.

certify_outside truncates the kneading series H(It_lambda, 1/z) and
certifies once the partial sum exceeds the geometric tail bound plus a
floating-point evaluation allowance.  certify_inside runs the inverse
iterated-function-system search of the suitability tree: a branch whose
inverse orbit modulus passes 2/(1-|z|) has escaped for good (both inverse
maps strictly increase the modulus beyond that threshold), so the search
certifies the complement exactly when every conditions-passing branch
escapes.  Only complement membership is ever asserted at finite depth; the
single positive case is the unit circle, which lies in every slice.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .kneading import itinerary_prefix
from .rates import GrowthRate, RateLike
from .suitability import SuitabilityContext
from .words import compare_bits

_EPS = 2.220446049250313e-16


class Verdict(enum.Enum):
    CERTIFIED_OUT = "certified_out"
    MEMBER = "member"
    INCONCLUSIVE = "inconclusive"


class Method(enum.Enum):
    OUTSIDE_SERIES = "outside_series"
    INSIDE_ENUMERATION = "inside_enumeration"
    FAST_PATH_HALF_DISK = "fast_path_half_disk"
    UNIT_CIRCLE = "unit_circle"


class AmbiguousModulus(ValueError):
    """|z| is within tolerance of 1 but not exactly on the unit circle."""


class MarginInsufficient(ValueError):
    """The recorded certification margin is below the requested epsilon."""


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    method: Method
    depth: int
    margin: float
    reduction_exponent: int = 0

    def __post_init__(self):
        if self.verdict is Verdict.CERTIFIED_OUT and not self.margin > 0:
            raise ValueError("a complement certificate requires positive margin")

    @property
    def certified_out(self) -> bool:
        return self.verdict is Verdict.CERTIFIED_OUT

    def with_reduction(self, k: int) -> "Certificate":
        return Certificate(self.verdict, self.method, self.depth, self.margin, k)


_squared_cache: dict[tuple, GrowthRate] = {}
_context_cache: dict[tuple, SuitabilityContext] = {}


def _squared(rate: GrowthRate) -> GrowthRate:
    sq = _squared_cache.get(rate.key)
    if sq is None:
        sq = rate.squared()
        _squared_cache[rate.key] = sq
    return sq


def _context(rate: GrowthRate, depth: int) -> SuitabilityContext:
    ctx = _context_cache.get((rate.key, depth))
    if ctx is None:
        ctx = SuitabilityContext.build(rate, depth)
        _context_cache[(rate.key, depth)] = ctx
    return ctx


def reduce_to_fundamental(z: complex, rate: RateLike) -> tuple[complex, GrowthRate, int]:
    """Replace (z, lambda) by (z^(2^k), lambda^(2^k)) with the rate in [sqrt2, 2).

    Valid because z is in the slice at lambda iff z^2 is in the slice at
    lambda^2, for every lambda in (1, 2).
    """
    rate = GrowthRate.convert(rate)
    if rate.cmp(2) >= 0:
        raise ValueError("reduction requires lambda < 2")
    z = complex(z)
    k = 0
    while rate.cmp_square(2) < 0:
        rate = _squared(rate)
        z = z * z
        k += 1
    return z, rate, k


def certify_outside(z0: complex, rate: RateLike, max_n: int = 200) -> Certificate:
    """Algorithm for |z0| > 1: truncate H(It_lambda, .) in powers of 1/z0 and
    certify z0 outside the slice once |partial| clears tail + rounding."""
    z0 = complex(z0)
    if not abs(z0) > 1:
        raise ValueError("certify_outside requires |z0| > 1")
    rate = GrowthRate.convert(rate)
    if rate.cmp(2) >= 0:
        raise ValueError("certify_outside requires lambda < 2")
    letters = itinerary_prefix(rate, max_n).letters
    u = 1 / z0
    au = abs(u)
    geom = 2 * au / (1 - au)
    partial = 1 + 0j
    upow = 1 + 0j
    sign = 1
    margin = 0.0
    for k in range(1, max_n + 1):
        upow *= u
        if letters[k - 1]:
            partial -= 2 * sign * upow
            sign = -sign
        if k < 2:
            continue
        tail = geom * au**k
        allowance = _EPS * (8 * k + 16) * (1 + geom)
        margin = abs(partial) - tail - allowance
        if margin > 0:
            return Certificate(Verdict.CERTIFIED_OUT, Method.OUTSIDE_SERIES, k, margin)
    return Certificate(Verdict.INCONCLUSIVE, Method.OUTSIDE_SERIES, max_n, margin)


def certify_inside(z0: complex, rate: RateLike, max_depth: int = 16) -> Certificate:
    """Algorithm for |z0| < 1 and lambda in [sqrt2, 2).

    Fast path: |z0| < 1/2 is outside every slice.  Otherwise search the
    tree of words satisfying the suitability prefix conditions, iterating
    the inverse maps y -> y/z0 and y -> (2-y)/z0 from y=1; a branch is
    pruned for good once |y| exceeds 2/(1-|z0|) beyond the accumulated
    rounding allowance (escape is monotone), and the point is certified
    out at the first depth where no live branch remains.
    """
    z0 = complex(z0)
    a = abs(z0)
    if not a < 1:
        raise ValueError("certify_inside requires |z0| < 1")
    if a < 0.5:
        return Certificate(
            Verdict.CERTIFIED_OUT, Method.FAST_PATH_HALF_DISK, 0, 0.5 - a
        )
    rate = GrowthRate.convert(rate)
    if rate.cmp_square(2) < 0 or rate.cmp(2) >= 0:
        raise ValueError("certify_inside requires lambda in [sqrt(2), 2)")
    ctx = _context(rate, max_depth)
    t_bits = ctx.itplus_prefix.bits
    zb = ctx.zero_bound
    radius = 2 / (1 - a)
    min_margin = float("inf")
    deepest = 0
    # stack entries: (rev_bits, length, parity, zero_run, y, err)
    stack = [(0, 0, 0, 0, 1 + 0j, 0.0)]
    while stack:
        rev, n, parity, zrun, y, err = stack.pop()
        if n == max_depth:
            return Certificate(
                Verdict.INCONCLUSIVE, Method.INSIDE_ENUMERATION, max_depth, 0.0
            )
        n2 = n + 1
        mask = (1 << n2) - 1
        tb = t_bits & mask
        ay = abs(y)
        grow = []
        for c in (0, 1):
            zr = zrun + 1 if c == 0 else 0
            if zr > zb:
                continue
            rev2 = (rev << 1) | c
            par2 = parity ^ c
            cstat = compare_bits(rev2, tb, n2)
            if cstat > 0 or (cstat == 0 and not par2):
                continue
            y2 = y / z0 if c == 0 else (2 - y) / z0
            ay2 = abs(y2)
            err2 = (err + 4 * _EPS * (ay + 2)) / a + 4 * _EPS * ay2
            if ay2 - err2 > radius:
                if ay2 - err2 - radius < min_margin:
                    min_margin = ay2 - err2 - radius
                continue
            grow.append((ay2, c, y2, err2, rev2, par2, zr))
        if n2 > deepest and grow:
            deepest = n2
        grow.sort(key=lambda t: -t[0])  # smaller |y| popped first
        for ay2, c, y2, err2, rev2, par2, zr in grow:
            stack.append((rev2, n2, par2, zr, y2, err2))
    return Certificate(
        Verdict.CERTIFIED_OUT,
        Method.INSIDE_ENUMERATION,
        deepest + 1,
        min_margin,
    )


def ball_radius(z_abs: float, depth: int, epsilon: float) -> float:
    """The effective-certificate radius around a point certified with margin
    epsilon at the given depth: min of the four closed-form terms."""
    if not 0.5 < z_abs < 1:
        raise ValueError("ball radius requires 1/2 < |z| < 1")
    if depth < 1:
        raise ValueError("ball radius requires a positive certification depth")
    return min(
        (1 - z_abs) / 2,
        (1 - z_abs) ** 2 * epsilon / 16,
        z_abs - 0.5,
        epsilon / (depth * 2 ** (depth + 1)),
    )


def certify_ball(
    z0: complex,
    rate: RateLike,
    depth: int,
    epsilon: float,
    certificate: Certificate | None = None,
) -> float:
    """Radius of a ball around z0 certified to lie in the complement.

    Requires a prior (or here recomputed) inside certification at `depth`
    whose margin is at least `epsilon`; raises MarginInsufficient otherwise.
    """
    z0 = complex(z0)
    a = abs(z0)
    if not 0.5 < a < 1:
        raise ValueError("certify_ball requires 1/2 < |z0| < 1")
    cert = certificate if certificate is not None else certify_inside(z0, rate, depth)
    if cert.verdict is not Verdict.CERTIFIED_OUT:
        raise MarginInsufficient("the point itself is not certified out")
    if cert.margin < epsilon:
        raise MarginInsufficient(
            f"recorded margin {cert.margin:.3e} is below epsilon {epsilon:.3e}"
        )
    return ball_radius(a, depth, epsilon)


def _exactly_on_circle(z: complex) -> bool:
    re = Fraction(z.real)
    im = Fraction(z.imag)
    return re * re + im * im == 1


def test_point(
    z: complex,
    rate: RateLike,
    budget: int = 20,
    unit_tol: float = 1e-9,
) -> Certificate:
    """Dispatch a point to the applicable certification regime.

    Points exactly on the unit circle are members of every slice; points
    within unit_tol of the circle (but not exactly on it) are rejected as
    AmbiguousModulus since neither algorithm converges there.
    """
    z = complex(z)
    rate = GrowthRate.convert(rate)
    if rate.cmp(2) >= 0:
        raise ValueError("test_point requires lambda < 2")
    m = abs(z)
    if abs(m - 1) <= unit_tol:
        if _exactly_on_circle(z):
            return Certificate(Verdict.MEMBER, Method.UNIT_CIRCLE, 0, 0.0)
        raise AmbiguousModulus(
            f"|z| = {m!r} is within {unit_tol} of the unit circle"
        )
    z2, rate2, k = reduce_to_fundamental(z, rate)
    if abs(z2) > 1:
        return certify_outside(z2, rate2, budget).with_reduction(k)
    return certify_inside(z2, rate2, budget).with_reduction(k)
