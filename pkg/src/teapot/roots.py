"""Root finding for integer polynomials.

all_roots runs a deterministic Aberth-Ehrlich simultaneous iteration
(numpy elementwise ops, roots-of-unity initialization scaled by the Cauchy
bound, fixed angular offset) with per-root residual validation.
leading_root takes an independent exact route: Sturm isolation of the
largest real root in (1, 2] over the rationals, bisected until the double
bracket collapses, then a Newton polish.  The two routes cross-check each
other in the tests.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _polyarith as pa
from .series import IntPolynomial


class NonConvergence(RuntimeError):
    """The simultaneous iteration exhausted its budget."""


@dataclass(frozen=True)
class RootSet:
    polynomial: IntPolynomial
    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    clustered: tuple[bool, ...]

    def __iter__(self):
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)


def _horner_pair(coeffs: np.ndarray, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    p = np.zeros_like(x)
    dp = np.zeros_like(x)
    for c in coeffs[::-1]:
        dp = dp * x + p
        p = p * x + c
    return p, dp


def _horner_with_floor(
    coeffs: np.ndarray, x: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Value, derivative, and a rounding floor for |p(x)| below which the
    evaluation is numerically indistinguishable from zero."""
    p = np.zeros_like(x)
    dp = np.zeros_like(x)
    err = np.zeros(x.shape, dtype=np.float64)
    ax = np.abs(x)
    for c in coeffs[::-1]:
        dp = dp * x + p
        p = p * x + c
        err = err * ax + np.abs(p)
    eps = np.finfo(np.float64).eps
    return p, dp, 2.0 * eps * err


def all_roots(p: IntPolynomial, tol: float = 1e-10, max_iter: int = 400) -> RootSet:
    """All complex roots of p with validated residuals |p(root)| <= tol * scale.

    Deterministic: fixed initialization and a fixed, schedule-free update
    order, so identical inputs give bit-identical outputs.
    """
    cs = list(p.coefficients)
    if len(cs) < 2:
        raise ValueError("all_roots requires degree >= 1")
    zeros = 0
    while cs[0] == 0:
        zeros += 1
        cs.pop(0)
    roots: list[complex] = [0j] * zeros
    d = len(cs) - 1
    if d >= 1:
        coeffs = np.array(cs, dtype=np.complex128)
        lead = coeffs[-1]
        radius = 1.0 + max(abs(c / lead) for c in coeffs[:-1])
        k = np.arange(d)
        x = radius * np.exp(2j * np.pi * (k + 0.376) / d)
        eps = np.finfo(np.float64).eps
        for it in range(max_iter):
            pv, dv, floor = _horner_with_floor(coeffs, x)
            # a root is done once |p(x)| sits at the evaluation noise floor
            active = np.abs(pv) > floor
            if not active.any():
                break
            dv = np.where(dv == 0, np.complex128(1e-300), dv)
            w = pv / dv
            diff = x[:, None] - x[None, :]
            np.fill_diagonal(diff, 1.0)
            s = np.sum(1.0 / diff, axis=1) - 1.0
            denom = 1.0 - w * s
            denom = np.where(denom == 0, np.complex128(1e-300), denom)
            delta = np.where(active, w / denom, 0.0)
            x = x - delta
            if np.max(np.abs(delta) / (1.0 + np.abs(x))) < 4 * eps:
                break
        else:
            raise NonConvergence(f"no convergence within {max_iter} iterations")
        for v in x:
            r = complex(v)
            if abs(r.imag) < 1e-12 * (1.0 + abs(r.real)):
                r = complex(r.real, 0.0)
            roots.append(r)
    roots.sort(key=lambda r: (r.real, r.imag))
    scale_coeffs = [abs(c) for c in p.coefficients]
    residuals = []
    for r in roots:
        scale = 0.0
        m = 1.0
        ar = abs(r)
        for c in scale_coeffs:
            scale += c * m
            m *= ar
        residuals.append(abs(p(r)) / max(scale, 1.0))
    bad = max(residuals) if residuals else 0.0
    if bad > tol:
        raise NonConvergence(f"residual {bad:.3e} exceeds tolerance {tol:.3e}")
    clustered = []
    for i, r in enumerate(roots):
        near = any(
            j != i and abs(roots[j] - r) < 10 * tol * (1 + abs(r))
            for j in range(len(roots))
        )
        clustered.append(near)
    return RootSet(p, tuple(roots), tuple(residuals), tuple(clustered))


def leading_root(p: IntPolynomial) -> float | None:
    """The largest real root of p in (1, 2], at full double precision.

    Exact Sturm isolation over Q, bisection to below double resolution,
    then a Newton polish; None when p has no real root in (1, 2].
    """
    if p.degree < 1:
        raise ValueError("leading_root requires degree >= 1")
    sf = pa.squarefree(pa.from_ints(p.coefficients))
    located = pa.isolate_rightmost_root(sf, 1, 2)
    if located is None:
        return None
    if located[0] == "rational":
        return float(located[1])
    a, b = located[1], located[2]
    sa = pa.evaluate(sf, a)
    while b - a > Fraction(1, 1 << 64):
        m = (a + b) / 2
        vm = pa.evaluate(sf, m)
        if vm == 0:
            return float(m)
        if (sa > 0) != (vm > 0):
            b = m
        else:
            a, sa = m, vm
    # the bracket is far below one double ulp; one exact Newton step from the
    # midpoint then correct rounding to double
    mid = (a + b) / 2
    dsf = pa.derivative(sf)
    dfx = pa.evaluate(dsf, mid)
    if dfx != 0:
        mid = mid - pa.evaluate(sf, mid) / dfx
    return float(mid)


def conjugates_in_disk(
    p: IntPolynomial, radius: float, tol: float = 1e-10
) -> list[complex]:
    """Roots of p with modulus <= radius (unit-circle roots kept in full)."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    if radius == 0 or p.degree < 1:
        return []
    rs = all_roots(p, tol=tol)
    pad = 1e-9 * max(1.0, radius)
    return [r for r in rs.roots if abs(r) <= radius + pad]
