"""Tent-map orbits and itineraries, computed exactly.

The orbit of 1 under the slope-lambda tent map is iterated in exact
arithmetic (see rates), so hits of the critical point 1/lambda -- the only
source of coding ambiguity and the signature of a periodic itinerary --
are detected exactly.  At a critical hit the letter is chosen greedily to
minimise the coding under the twisted order: letter 1 when the preceding
prefix has negative cumulative sign, letter 0 otherwise; the chosen period
word always has positive sign, so the greedy coding is purely periodic.
"""
from __future__ import annotations

from dataclasses import dataclass

from .rates import GrowthRate, RateLike
from .words import Word


class _Trace:
    """Lazily extended exact orbit/itinerary of a single growth rate."""

    __slots__ = ("rate", "letters", "hits", "period", "_x", "_sign_neg")

    def __init__(self, rate: GrowthRate):
        self.rate = rate
        self.letters: list[int] = []
        self.hits: list[int] = []
        self.period: int | None = None
        self._x = rate.one()
        self._sign_neg = False

    def extend_to(self, n: int) -> None:
        rate = self.rate
        letters = self.letters
        while len(letters) < n:
            if self.period is not None:
                letters.append(letters[len(letters) - self.period])
                if letters[-1]:
                    self._sign_neg = not self._sign_neg
                continue
            t = rate.mul_lambda(self._x)
            s = rate.sign_minus_one(t)
            if s < 0:
                letters.append(0)
                self._x = t
            elif s > 0:
                letters.append(1)
                self._x = rate.two_minus(t)
            else:
                # exact critical hit: both branches continue at 1
                c = 1 if self._sign_neg else 0
                letters.append(c)
                self.hits.append(len(letters) - 1)
                self.period = len(letters)
                self._x = rate.one()
            if letters[-1]:
                self._sign_neg = not self._sign_neg


_traces: dict[tuple, _Trace] = {}


def _trace(rate: GrowthRate) -> _Trace:
    tr = _traces.get(rate.key)
    if tr is None:
        tr = _Trace(rate)
        _traces[rate.key] = tr
    return tr


@dataclass(frozen=True)
class ItineraryPrefix:
    """An exact N-prefix of It_lambda with its resolved ambiguity sites."""

    rate: GrowthRate
    letters: Word
    ambiguity_resolved_at: tuple[int, ...]  # 0-based letter indices
    period: int | None  # exact minimal period when detected within the prefix


def tent_orbit(rate: RateLike, n: int):
    """Orbit points 1, f(1), ..., f^n(1) of the tent map, as floats.

    The iteration itself is exact; the returned values are the correctly
    rounded doubles of the exact orbit points.
    """
    if n < 0:
        raise ValueError("orbit length must be >= 0")
    rate = GrowthRate.convert(rate)
    x = rate.one()
    out = [rate.element_to_float(x)]
    for _ in range(n):
        t = rate.mul_lambda(x)
        s = rate.sign_minus_one(t)
        x = t if s <= 0 else rate.two_minus(t)
        out.append(rate.element_to_float(x))
    return out


def itinerary_prefix(rate: RateLike, n: int) -> ItineraryPrefix:
    """The exact N-prefix of the minimal coding It_lambda."""
    if n < 1:
        raise ValueError("prefix length must be >= 1")
    rate = GrowthRate.convert(rate)
    tr = _trace(rate)
    tr.extend_to(n)
    period = tr.period if tr.period is not None and tr.period <= n else None
    hits = tuple(h for h in tr.hits if h < n)
    if period is not None:
        hits = tuple(range(period - 1, n, period))
    return ItineraryPrefix(rate, Word(tr.letters[:n]), hits, period)


def itinerary_period(rate: RateLike, within: int) -> Word | None:
    """The minimal period word when It_lambda is periodic with period <= within."""
    rate = GrowthRate.convert(rate)
    tr = _trace(rate)
    tr.extend_to(within)
    if tr.period is not None and tr.period <= within:
        return Word(tr.letters[: tr.period])
    return None


def right_limit_itinerary(rate: RateLike, n: int) -> Word:
    """The N-prefix of It+_lambda = lim It_{lambda'} as lambda' -> lambda+.

    Equals the prefix of It_lambda unless It_lambda is periodic with minimal
    period word w0, in which case the limit is w0' . w0^inf where w0' flips
    the last letter of w0: just above lambda the orbit misses the critical
    point once (flipping that single letter) and then shadows the periodic
    orbit with a same-signed, geometrically growing deviation, so no later
    letter flips.  A period longer than n cannot affect the first n letters,
    so the scan depth n is always sufficient.
    """
    if n < 1:
        raise ValueError("prefix length must be >= 1")
    rate = GrowthRate.convert(rate)
    tr = _trace(rate)
    tr.extend_to(n)
    letters = tr.letters[:n]
    if tr.period is not None and tr.period <= n:
        letters = list(letters)
        letters[tr.period - 1] ^= 1
    return Word(letters)


def zero_run_bound(rate: RateLike) -> int:
    """The k with It+_lambda = 1 0^k 1 ...; requires lambda < 2.

    This leading zero run is nondecreasing in lambda, so it is the binding
    zero-run constraint over all lambda' > lambda.
    """
    rate = GrowthRate.convert(rate)
    if rate.cmp(2) >= 0:
        raise ValueError("zero_run_bound requires lambda < 2")
    n = 8
    while True:
        prefix = right_limit_itinerary(rate, n)
        for i in range(1, len(prefix)):
            if prefix[i] == 1:
                return i - 1
        n *= 2
