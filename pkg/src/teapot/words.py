"""Finite words and eventually periodic sequences over the alphabet {0, 1}.

Implements the combinatorial layer: cumulative signs, the twisted
lexicographic order, the shift map, admissibility and dominance, and the
two doubling substitutions together with renormalization (their inverse).

Words are stored as packed bit integers (bit i = letter i+1, LSB first)
with a cached cumulative sign, so order comparisons and prefix-sign queries
are O(1) integer operations.
"""
from __future__ import annotations

from math import lcm
from typing import Iterable, Iterator, Union

Letters = Union[str, Iterable[int], "Word"]


class NotRenormalizable(ValueError):
    """Raised when the structural test for renormalizability fails."""


def _parse_letters(letters: Letters) -> tuple[int, int]:
    """Return (bits, length) for a letter source."""
    if isinstance(letters, Word):
        return letters._bits, letters._n
    bits = 0
    n = 0
    for ch in letters:
        b = int(ch)
        if b not in (0, 1):
            raise ValueError(f"letters must be 0 or 1, got {ch!r}")
        bits |= b << n
        n += 1
    return bits, n


class Word:
    """A finite bit word w_1..w_n with cached cumulative sign."""

    __slots__ = ("_bits", "_n", "_sign")

    def __init__(self, letters: Letters = ""):
        self._bits, self._n = _parse_letters(letters)
        self._sign = -1 if (self._bits.bit_count() & 1) else 1

    @classmethod
    def _from_bits(cls, bits: int, n: int) -> "Word":
        w = cls.__new__(cls)
        w._bits = bits
        w._n = n
        w._sign = -1 if (bits.bit_count() & 1) else 1
        return w

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def sign(self) -> int:
        """Cumulative sign (-1)**(number of 1s)."""
        return self._sign

    def __len__(self) -> int:
        return self._n

    def __bool__(self) -> bool:
        return self._n > 0

    def __getitem__(self, i):
        if isinstance(i, slice):
            start, stop, step = i.indices(self._n)
            if step != 1:
                raise ValueError("only contiguous slices are supported")
            n = max(0, stop - start)
            return Word._from_bits((self._bits >> start) & ((1 << n) - 1), n)
        if i < 0:
            i += self._n
        if not 0 <= i < self._n:
            raise IndexError("letter index out of range")
        return (self._bits >> i) & 1

    def __iter__(self) -> Iterator[int]:
        bits = self._bits
        for _ in range(self._n):
            yield bits & 1
            bits >>= 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Word)
            and self._n == other._n
            and self._bits == other._bits
        )

    def __hash__(self) -> int:
        return hash((self._bits, self._n))

    def __str__(self) -> str:
        return "".join(str((self._bits >> i) & 1) for i in range(self._n))

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __add__(self, other: "Word") -> "Word":
        return Word._from_bits(self._bits | (other._bits << self._n), self._n + other._n)

    def __mul__(self, times: int) -> "Word":
        if times < 0:
            raise ValueError("repetition count must be >= 0")
        bits = 0
        for _ in range(times):
            bits = (bits << self._n) | self._bits
        return Word._from_bits(bits, self._n * times)

    def prefix(self, k: int) -> "Word":
        if not 0 <= k <= self._n:
            raise ValueError("prefix length out of range")
        return Word._from_bits(self._bits & ((1 << k) - 1), k)

    def suffix(self, k: int) -> "Word":
        if not 0 <= k <= self._n:
            raise ValueError("suffix length out of range")
        return Word._from_bits(self._bits >> (self._n - k), k)

    def reverse(self) -> "Word":
        bits = 0
        src = self._bits
        for _ in range(self._n):
            bits = (bits << 1) | (src & 1)
            src >>= 1
        return Word._from_bits(bits, self._n)

    def prefix_sign(self, k: int) -> int:
        """Cumulative sign of the k-prefix."""
        return -1 if ((self._bits & ((1 << k) - 1)).bit_count() & 1) else 1

    def ones(self) -> int:
        return self._bits.bit_count()

    def max_zero_run(self) -> int:
        """Length of the longest run of consecutive 0s."""
        best = run = 0
        bits = self._bits
        for _ in range(self._n):
            if bits & 1:
                run = 0
            else:
                run += 1
                if run > best:
                    best = run
            bits >>= 1
        return best


def cumulative_sign(w: Word) -> int:
    """(-1)**(number of 1s in w); the empty word has sign +1."""
    return w.sign


def compare_bits(abits: int, bbits: int, n: int) -> int:
    """Twisted-lexicographic comparison of two n-bit packed words.

    Returns -1, 0, +1.  At the first differing index the larger letter wins
    when the common prefix has positive cumulative sign, the smaller letter
    when negative.
    """
    x = (abits ^ bbits) & ((1 << n) - 1)
    if x == 0:
        return 0
    j = (x & -x).bit_length() - 1
    s = -1 if ((abits & ((1 << j) - 1)).bit_count() & 1) else 1
    d = ((bbits >> j) & 1) - ((abits >> j) & 1)
    return -s * d


class SymbolSeq:
    """An eventually periodic sequence preperiod . period^inf over {0, 1}.

    The stored representation is canonical: the period is primitive (not a
    proper power) and the preperiod is minimal (its last letter differs from
    the period's last letter), so structural equality decides sequence
    equality.
    """

    __slots__ = ("_pre", "_per")

    def __init__(self, period: Letters, preperiod: Letters = ""):
        per = period if isinstance(period, Word) else Word(period)
        pre = preperiod if isinstance(preperiod, Word) else Word(preperiod)
        if len(per) == 0:
            raise ValueError("period must be nonempty")
        per = _primitive(per)
        while len(pre) and pre[-1] == per[-1]:
            per = per.suffix(1) + per.prefix(len(per) - 1)
            pre = pre.prefix(len(pre) - 1)
        self._pre = pre
        self._per = per

    @property
    def preperiod(self) -> Word:
        return self._pre

    @property
    def period(self) -> Word:
        return self._per

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("sequence index must be >= 0")
        p = len(self._pre)
        if i < p:
            return self._pre[i]
        return self._per[(i - p) % len(self._per)]

    def prefix(self, n: int) -> Word:
        bits = 0
        for i in range(n):
            bits |= self[i] << i
        return Word._from_bits(bits, n)

    def prefix_sign(self, n: int) -> int:
        return self.prefix(n).sign

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SymbolSeq)
            and self._pre == other._pre
            and self._per == other._per
        )

    def __hash__(self) -> int:
        return hash((self._pre, self._per))

    def __str__(self) -> str:
        return f"{self._pre}({self._per})*"

    def __repr__(self) -> str:
        if len(self._pre):
            return f"SymbolSeq({str(self._per)!r}, preperiod={str(self._pre)!r})"
        return f"SymbolSeq({str(self._per)!r})"


def _primitive(per: Word) -> Word:
    n = len(per)
    for q in range(1, n):
        if n % q == 0 and per.prefix(q) * (n // q) == per:
            return per.prefix(q)
    return per


def shift(s: SymbolSeq, k: int = 1) -> SymbolSeq:
    """The k-fold shift sigma^k, in canonical form."""
    if k < 0:
        raise ValueError("shift count must be >= 0")
    p = len(s.preperiod)
    if k <= p:
        return SymbolSeq(s.period, s.preperiod.suffix(p - k))
    r = (k - p) % len(s.period)
    per = s.period.suffix(len(s.period) - r) + s.period.prefix(r)
    return SymbolSeq(per)


def twisted_compare(a, b) -> int:
    """Total order <=_E: -1 if a <_E b, 0 if equal, +1 if a >_E b.

    Accepts two Words of equal length, or two SymbolSeqs (where the
    comparison is decided within one aligned preperiod + lcm of periods).
    """
    if isinstance(a, Word) and isinstance(b, Word):
        if len(a) != len(b):
            raise ValueError("twisted_compare requires words of equal length")
        return compare_bits(a.bits, b.bits, len(a))
    if isinstance(a, SymbolSeq) and isinstance(b, SymbolSeq):
        bound = max(len(a.preperiod), len(b.preperiod)) + lcm(
            len(a.period), len(b.period)
        )
        sign = 1
        for i in range(bound):
            x, y = a[i], b[i]
            if x != y:
                return -sign * (y - x)
            if x:
                sign = -sign
        return 0
    raise TypeError("twisted_compare expects two Words or two SymbolSeqs")


def is_admissible(w: Word) -> bool:
    """Word admissibility: starts 10, positive sign, and sigma^k(w^inf) <=_E w^inf."""
    if len(w) < 2 or w[0] != 1 or w[1] != 0 or w.sign != 1:
        return False
    s = SymbolSeq(w)
    for k in range(1, len(w)):
        if twisted_compare(shift(s, k), s) > 0:
            return False
    return True


def is_dominant(w: Word) -> bool:
    """Dominance: positive sign and Suffix_k(w).1 <_E Prefix_{k+1}(w) for all k."""
    if w.sign != 1:
        return False
    one = Word("1")
    for k in range(1, len(w)):
        if twisted_compare(w.suffix(k) + one, w.prefix(k + 1)) >= 0:
            return False
    return True


def _sub_word(w: Word, image0: Word, image1: Word) -> Word:
    out = Word()
    for b in w:
        out = out + (image1 if b else image0)
    return out


def double(x):
    """The doubling substitution 1 -> 10, 0 -> 11 on a Word or SymbolSeq."""
    if isinstance(x, Word):
        return _sub_word(x, Word("11"), Word("10"))
    if isinstance(x, SymbolSeq):
        return SymbolSeq(double(x.period), double(x.preperiod))
    raise TypeError("double expects a Word or SymbolSeq")


def double_prime(x):
    """The reversal-conjugate substitution 0 -> 11, 1 -> 01."""
    if isinstance(x, Word):
        return _sub_word(x, Word("11"), Word("01"))
    if isinstance(x, SymbolSeq):
        return SymbolSeq(double_prime(x.period), double_prime(x.preperiod))
    raise TypeError("double_prime expects a Word or SymbolSeq")


def _undouble_word(w: Word) -> Word:
    out = 0
    for j in range(len(w) // 2):
        if w[2 * j] != 1:
            raise NotRenormalizable(f"letter at position {2 * j + 1} is 0")
        out |= (1 - w[2 * j + 1]) << j
    return Word._from_bits(out, len(w) // 2)


def renormalize(x):
    """Inverse of double: the w' with double(w') == x.

    Raises NotRenormalizable when the structural test fails (for words:
    even length and every odd-position letter equal to 1; for sequences:
    every odd-position letter equal to 1).
    """
    if isinstance(x, Word):
        if len(x) % 2:
            raise NotRenormalizable("word has odd length")
        return _undouble_word(x)
    if isinstance(x, SymbolSeq):
        pre, per = x.preperiod, x.period
        if len(pre) % 2:
            pre = pre + per.prefix(1)
            per = per.suffix(len(per) - 1) + per.prefix(1)
        if len(per) % 2:
            per = per * 2
        # one parity window beyond the preperiod covers all period offsets
        probe = pre + per
        for j in range(0, len(probe), 2):
            if probe[j] != 1:
                raise NotRenormalizable(f"letter at position {j + 1} is 0")
        return SymbolSeq(_undouble_word(per), _undouble_word(pre))
    raise TypeError("renormalize expects a Word or SymbolSeq")
