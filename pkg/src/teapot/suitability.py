"""Prefix-level suitability conditions and the word sets M_{N,lambda}.

The defining conditions quantify over every slope lambda' > lambda.  They
reduce to a single finite check against the right-limit itinerary It+:
n-prefixes of It_{lambda'} are >=_E-monotone in lambda' and stabilise to
Prefix_n(It+) as lambda' decreases to lambda, so condition (1) holds for
all lambda' iff Reverse(Prefix_n(w)) <=_E Prefix_n(It+); the equality case
of condition (2) can only occur at that stabilised prefix, which nearby
lambda' attain; and the leading zero run of It_{lambda'} is nondecreasing
in lambda', so condition (3)'s binding bound is the zero run of It+.
"""
from __future__ import annotations

from dataclasses import dataclass

from .kneading import right_limit_itinerary, zero_run_bound
from .rates import GrowthRate, RateLike
from .words import Word, compare_bits


@dataclass(frozen=True)
class SuitabilityContext:
    """Everything needed to test conditions (1)-(3) up to a fixed depth."""

    rate: GrowthRate
    itplus_prefix: Word
    zero_bound: int

    @classmethod
    def build(cls, rate: RateLike, depth: int) -> "SuitabilityContext":
        rate = GrowthRate.convert(rate)
        if not (rate.cmp(1) > 0 and rate.cmp(2) < 0):
            raise ValueError("suitability context requires lambda in (1, 2)")
        return cls(rate, right_limit_itinerary(rate, depth), zero_run_bound(rate))

    @property
    def depth(self) -> int:
        return len(self.itplus_prefix)


def prefix_conditions(alpha: Word, ctx: SuitabilityContext) -> bool:
    """Conditions (1)-(3) for a word: for every n <= |alpha|,
    Reverse(Prefix_n(alpha)) <_E Prefix_n(It+), or they are equal and the
    prefix sign is -1; and alpha has no run of zero_bound + 1 zeros.
    """
    n = len(alpha)
    if n > ctx.depth:
        raise ValueError("word longer than the context's itinerary prefix")
    if alpha.max_zero_run() > ctx.zero_bound:
        return False
    t_bits = ctx.itplus_prefix.bits
    rev = 0
    parity = 0
    abits = alpha.bits
    for k in range(n):
        bit = (abits >> k) & 1
        rev = (rev << 1) | bit
        parity ^= bit
        c = compare_bits(rev, t_bits & ((1 << (k + 1)) - 1), k + 1)
        if c > 0 or (c == 0 and not parity):
            return False
    return True


def enumerate_M(rate: RateLike, N: int, ctx: SuitabilityContext | None = None) -> list[Word]:
    """All words of length N satisfying conditions (1)-(3), by pruned DFS.

    The conditions are prefix-monotone, so a failing prefix is never
    extended.  Children are visited 0 before 1; the result is sorted by
    the natural reading of the word as a binary string.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    rate = GrowthRate.convert(rate)
    if rate.cmp_square(2) < 0:
        raise ValueError(
            "enumerate_M requires lambda >= sqrt(2); square the rate first"
        )
    if ctx is None:
        ctx = SuitabilityContext.build(rate, N)
    if ctx.depth < N:
        ctx = SuitabilityContext.build(ctx.rate, N)
    t_bits = ctx.itplus_prefix.bits
    zb = ctx.zero_bound
    out: list[Word] = []
    # stack entries: (bits, rev_bits, length, parity, trailing_zero_run)
    stack = [(0, 0, 0, 0, 0)]
    while stack:
        bits, rev, n, parity, zrun = stack.pop()
        if n == N:
            out.append(Word._from_bits(bits, N))
            continue
        for c in (1, 0):
            zr = 0 if c else zrun + 1
            if zr > zb:
                continue
            rev2 = (rev << 1) | c
            par2 = parity ^ c
            cstat = compare_bits(rev2, t_bits & ((1 << (n + 1)) - 1), n + 1)
            if cstat > 0 or (cstat == 0 and not par2):
                continue
            stack.append((bits | (c << n), rev2, n + 1, par2, zr))
    out.sort(key=lambda w: str(w))
    return out
