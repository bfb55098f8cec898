"""The iterated-map polynomial F(w, z), Parry polynomials, and the kneading
power series G (inside the unit disk) and H (outside, in powers of 1/z).

Coefficient streams are derived from prefix signs rather than nested
composition: unrolling f_{w1}(x) = 2 w1 + (-1)^{w1} z x gives

    G(w, z) = sum_{k>=1} 2 w_k s_{k-1} z^(k-1)
    H(w, z) = 1 - sum_{k>=1} 2 w_k s_{k-1} z^(-k)

with s_j the cumulative sign of the j-prefix, so every coefficient is an
exact integer in {0, +2, -2} (plus H's leading 1) and the truncation error
is a clean geometric tail.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .words import SymbolSeq, Word

LetterSource = Union[Word, SymbolSeq, Iterable[int]]


class NegativeSignWord(ValueError):
    """Parry polynomials are defined for words of positive cumulative sign."""


def _letters(source: LetterSource, n: int) -> Iterator[int]:
    if isinstance(source, Word):
        if n > len(source):
            raise ValueError("word too short for requested series length")
        for i in range(n):
            yield source[i]
        return
    if isinstance(source, SymbolSeq):
        for i in range(n):
            yield source[i]
        return
    it = iter(source)
    for _ in range(n):
        yield next(it)


class IntPolynomial:
    """An integer-coefficient polynomial, coefficients ascending by degree."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[int]):
        cs = [int(c) for c in coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPolynomial) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __call__(self, z):
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * z + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + IntPolynomial([-c for c in other._coeffs])

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self._coeffs or not other._coeffs:
            return IntPolynomial([])
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def compose_square(self) -> "IntPolynomial":
        """p(z^2)."""
        out = [0] * (2 * len(self._coeffs) - 1) if self._coeffs else []
        for i, c in enumerate(self._coeffs):
            out[2 * i] = c
        return IntPolynomial(out)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)!r})"


def f_step(letter: int, z, x):
    """One generator of the IFS: f_0(x) = z x, f_1(x) = 2 - z x."""
    return 2 - z * x if letter else z * x


def F_eval(word: Word, z):
    """F(w, z) = f_{w_n} o ... o f_{w_1}(1), the first letter applied first."""
    x = 1
    for b in word:
        x = 2 - z * x if b else z * x
    return x


def F_polynomial(word: Word) -> IntPolynomial:
    """F(w, z) as an exact integer polynomial in z."""
    coeffs = [1]
    for b in word:
        coeffs = [0] + coeffs  # multiply by z
        if b:
            coeffs = [-c for c in coeffs]
            coeffs[0] += 2
    return IntPolynomial(coeffs)


def parry_polynomial(word: Word) -> IntPolynomial:
    """P_w(z) = F(w, z) - 1 for a word of positive cumulative sign."""
    if word.sign != 1:
        raise NegativeSignWord(f"word {word} has cumulative sign -1")
    f = F_polynomial(word)
    cs = list(f.coefficients)
    if not cs:
        cs = [0]
    cs[0] -= 1
    return IntPolynomial(cs)


@dataclass(frozen=True)
class SeriesPartial:
    """A truncated kneading series with exact integer coefficients.

    variable_kind is "z" for G (powers z^0..z^(L-1)) or "z_inv" for H
    (powers z^0..z^-(L-1)); L = len(coefficients).
    """

    variable_kind: str
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if self.variable_kind not in ("z", "z_inv"):
            raise ValueError("variable_kind must be 'z' or 'z_inv'")

    @property
    def length(self) -> int:
        return len(self.coefficients)

    def evaluate(self, z) -> complex:
        u = z if self.variable_kind == "z" else 1 / z
        acc = 0j
        for c in reversed(self.coefficients):
            acc = acc * u + c
        return acc

    def tail_bound(self, z_abs: float) -> float:
        """Geometric bound on the dropped tail (coefficients bounded by 2).

        For G this requires |z| < 1, for H |z| > 1 (the sound corrected
        denominator 1 - |z|^(-1) is used on the H side).
        """
        n = self.length
        if self.variable_kind == "z":
            if not z_abs < 1:
                raise ValueError("G tail bound requires |z| < 1")
            return 2 * z_abs**n / (1 - z_abs)
        if not z_abs > 1:
            raise ValueError("H tail bound requires |z| > 1")
        u = 1 / z_abs
        return 2 * u**n / (1 - u)


def g_coefficients(source: LetterSource, n: int) -> list[int]:
    """First n coefficients of G: coefficient of z^(k-1) is 2 w_k s_{k-1}."""
    out = []
    sign = 1
    for b in _letters(source, n):
        out.append(2 * sign if b else 0)
        if b:
            sign = -sign
    return out


def h_coefficients(source: LetterSource, n: int) -> list[int]:
    """First n coefficients of H: leading 1, then -2 w_k s_{k-1} at z^-k."""
    out = [1]
    sign = 1
    for b in _letters(source, n - 1):
        out.append(-2 * sign if b else 0)
        if b:
            sign = -sign
    return out


def g_series(source: LetterSource, n: int) -> SeriesPartial:
    return SeriesPartial("z", tuple(g_coefficients(source, n)))


def h_series(source: LetterSource, n: int) -> SeriesPartial:
    return SeriesPartial("z_inv", tuple(h_coefficients(source, n)))


def verify_ghp(word: Word, z: complex, target: float = 1e-13) -> float:
    """Residual of the relation linking P_w to the two kneading series:
    P_w(z) = (1-z^n)(G(Rev(w)^inf, z) - 1) = z^n (1-z^-n) H(w^inf, z),
    evaluated with the branch convergent at z.

    (The G side carries the "-1": iterating the word's affine map gives
    G(Rev(w)^inf, z) = 1 + P_w(z)/(1-z^n), matching the G(w,z) = 1
    membership characterization at Parry roots.)

    Returns the relative discrepancy between P_w(z) and the series-side
    expression, whose truncation depth is chosen so the geometric tail is
    below `target` (relative).
    """
    z_abs = abs(z)
    if z_abs == 1:
        raise ValueError("the identity check requires |z| != 1")
    n = len(word)
    p = parry_polynomial(word)
    p_val = p(complex(z))
    scale = max(1.0, abs(p_val))
    if z_abs < 1:
        seq = SymbolSeq(word.reverse())
        length = 8
        while g_series(seq, length).tail_bound(z_abs) > target * scale:
            length *= 2
        series = g_series(seq, length)
        side = (1 - complex(z) ** n) * (series.evaluate(z) - 1)
    else:
        seq = SymbolSeq(word)
        length = 8
        while h_series(seq, length).tail_bound(z_abs) > target * scale:
            length *= 2
        series = h_series(seq, length)
        side = complex(z) ** n * (1 - complex(z) ** (-n)) * series.evaluate(z)
    return abs(p_val - side) / scale
