"""The three hyperbolic ratio functions and the substitution machinery.

Writing a = A(1 + t), b = A(1 - t) and t = sinh θ turns each comparison of
the asinh-based mean M with the quadratic-family means into a statement
about one of three ratios of entire functions of θ:

* h1(θ) = (sinh θ - θ) / (2θ sinh²θ)                      — decreasing,
* h2(θ) = (1 - sinhθ/θ + sinh²θ/3) / (cosh θ - sinhθ/θ)  — increasing,
* h3(θ) = (cosh θ - sinhθ/θ) / (1 + sinh²θ - sinhθ/θ)    — decreasing.

Pairs of positive reals only ever produce θ in (0, θ*) with
θ* = ln(1 + √2) — that is asinh(1), the image of t → 1 — so the function
values at 0⁺ and θ* are exactly the sharp constants of the inequality
catalog.  This module evaluates the ratios accurately over the whole range
(series near 0, cancellation-safe numerator/denominator kernels elsewhere),
checks the substitution identities numerically, scans monotonicity, and
solves the scalar root equation for the exponent p0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import mpmath as mp
import numpy as np

from .errors import BracketError, DegeneratePairError, DomainError, ParameterError
from .means import PositivePair
from .series import LemmaSeries, SeriesId, coefficient_floats, series, truncated_series_eval

__all__ = [
    "TAU_H",
    "THETA_STAR",
    "HFunction",
    "IdentityResiduals",
    "ScanVerdict",
    "h_function",
    "h_eval",
    "substitution_theta",
    "identity_residuals",
    "monotonicity_scan",
    "solve_p0",
    "m_to_ch_ratio",
]

# Image of t -> 1 under θ = asinh(t): the right endpoint of the θ range
# that actual pairs can reach.
THETA_STAR = math.log(1.0 + math.sqrt(2.0))

# Below this θ the ratios come from their truncated power series.
TAU_H = 1e-3

# The numerators/denominators above are differences of near-equal terms for
# small θ; below this cutoff they are evaluated from their own series so the
# assembled closed form stays accurate to a few ulp over the whole range.
# (At the cutoff the direct subtractions lose less than one bit.)
_KERNEL_CUT = 2.0
_KERNEL_DEPTH = 18


def _poly(coeffs: np.ndarray, x2):
    acc = np.zeros_like(x2)
    for c in coeffs[::-1]:
        acc = acc * x2 + c
    return acc


def _sinh_defect(th):
    """sinh θ - θ, safe against cancellation for small θ."""
    small = th < _KERNEL_CUT
    ts = np.where(small, th, 0.0)
    num_c, _ = coefficient_floats(SeriesId.H1, _KERNEL_DEPTH)
    ser = _poly(num_c, ts * ts) * ts * ts * ts
    tb = np.where(small, 1.0, th)
    return np.where(small, ser, np.sinh(tb) - tb)


def _cosh_sinhc_gap(th):
    """cosh θ - sinh θ/θ."""
    small = th < _KERNEL_CUT
    ts = np.where(small, th, 0.0)
    _, den_c = coefficient_floats(SeriesId.H2, _KERNEL_DEPTH)
    ser = _poly(den_c, ts * ts) * ts * ts
    tb = np.where(small, 1.0, th)
    return np.where(small, ser, np.cosh(tb) - np.sinh(tb) / tb)


def _h2_numerator(th):
    """1 - sinh θ/θ + sinh²θ/3."""
    small = th < _KERNEL_CUT
    ts = np.where(small, th, 0.0)
    num_c, _ = coefficient_floats(SeriesId.H2, _KERNEL_DEPTH)
    ser = _poly(num_c, ts * ts) * ts * ts
    tb = np.where(small, 1.0, th)
    s = np.sinh(tb)
    return np.where(small, ser, 1.0 - s / tb + s * s / 3.0)


def _h3_denominator(th):
    """1 + sinh²θ - sinh θ/θ."""
    small = th < _KERNEL_CUT
    ts = np.where(small, th, 0.0)
    _, den_c = coefficient_floats(SeriesId.H3, _KERNEL_DEPTH)
    ser = _poly(den_c, ts * ts) * ts * ts
    tb = np.where(small, 1.0, th)
    s = np.sinh(tb)
    return np.where(small, ser, 1.0 + s * s - s / tb)


def _h1_safe(th):
    s = np.sinh(th)
    return _sinh_defect(th) / (2.0 * th * s * s)


def _h2_safe(th):
    return _h2_numerator(th) / _cosh_sinhc_gap(th)


def _h3_safe(th):
    return _cosh_sinhc_gap(th) / _h3_denominator(th)


@dataclass(frozen=True)
class HFunction:
    """One of the three ratio functions, with its series and endpoint data.

    ``closed_form`` is the textbook formula, valid for θ > 0 and used as an
    oracle at moderate arguments; :func:`h_eval` is the accurate evaluator.
    ``endpoint_value`` is the value at θ* to 40 significant digits, stored
    as an mpmath float.
    """

    id: SeriesId
    closed_form: Callable[[float], float]
    series: LemmaSeries
    direction: str
    limit_zero: Fraction
    endpoint_value: mp.mpf


def _naive_h1(th: float) -> float:
    s = math.sinh(th)
    return (s - th) / (2.0 * th * s * s)


def _naive_h2(th: float) -> float:
    s = math.sinh(th)
    return (1.0 - s / th + s * s / 3.0) / (math.cosh(th) - s / th)


def _naive_h3(th: float) -> float:
    s = math.sinh(th)
    return (math.cosh(th) - s / th) / (1.0 + s * s - s / th)


def _endpoint_values() -> dict[SeriesId, mp.mpf]:
    # At θ* we have sinh θ* = 1 and cosh θ* = √2, so each ratio collapses
    # to a short expression in θ* alone.
    with mp.workdps(40):
        ts = mp.log(1 + mp.sqrt(2))
        h1 = (1 - ts) / (2 * ts)
        h2 = (mp.mpf(4) / 3 - 1 / ts) / (mp.sqrt(2) - 1 / ts)
        h3 = (mp.sqrt(2) - 1 / ts) / (2 - 1 / ts)
    return {SeriesId.H1: h1, SeriesId.H2: h2, SeriesId.H3: h3}


_ENDPOINTS = _endpoint_values()

_H_FUNCTIONS = {
    SeriesId.H1: HFunction(
        SeriesId.H1, _naive_h1, series(SeriesId.H1), "decreasing",
        Fraction(1, 12), _ENDPOINTS[SeriesId.H1],
    ),
    SeriesId.H2: HFunction(
        SeriesId.H2, _naive_h2, series(SeriesId.H2), "increasing",
        Fraction(1, 2), _ENDPOINTS[SeriesId.H2],
    ),
    SeriesId.H3: HFunction(
        SeriesId.H3, _naive_h3, series(SeriesId.H3), "decreasing",
        Fraction(2, 5), _ENDPOINTS[SeriesId.H3],
    ),
}

_SAFE_FORMS = {
    SeriesId.H1: _h1_safe,
    SeriesId.H2: _h2_safe,
    SeriesId.H3: _h3_safe,
}


def h_function(which) -> HFunction:
    """Resolve an HFunction from itself, a SeriesId, or a string like 'h2'."""
    if isinstance(which, HFunction):
        return which
    if isinstance(which, str):
        which = which.upper()
    try:
        return _H_FUNCTIONS[SeriesId(which)]
    except (KeyError, ValueError):
        raise ParameterError(f"unknown h function {which!r}") from None


def h_eval(which, theta):
    """Evaluate one of the ratio functions at θ >= 0 (scalar or array).

    θ below ``TAU_H`` goes through the truncated series (which also covers
    the continuous extension h(0) = limit_at_zero); everything else goes
    through the cancellation-safe closed form.
    """
    hf = h_function(which)
    th = np.asarray(theta, dtype=np.float64)
    if not (np.isfinite(th).all() and (th >= 0.0).all()):
        raise DomainError("h functions are evaluated for θ >= 0")
    small = th < TAU_H
    ts = np.where(small, th, 0.5 * TAU_H)
    from_series = truncated_series_eval(hf.id, ts, depth=8)
    tb = np.where(small, 1.0, th)
    from_closed = _SAFE_FORMS[hf.id](tb)
    out = np.where(small, from_series, from_closed)
    return float(out) if np.ndim(out) == 0 else out


def substitution_theta(pair: PositivePair) -> float:
    """θ = asinh(|a - b|/(a + b)), the substitution variable of the proofs.

    Scale-free and symmetric; always lands in (0, θ*).  Equal arguments have
    no θ and raise.
    """
    if pair.degenerate:
        raise DegeneratePairError("equal arguments do not determine a θ")
    hi, lo = (pair.a, pair.b) if pair.a >= pair.b else (pair.b, pair.a)
    return math.asinh((hi - lo) / (hi + lo))


@dataclass(frozen=True)
class IdentityResiduals:
    """How well the four substitution identities hold on one pair.

    ``ratios`` holds the left-hand sides — (M-C)/CH, (C̄-M)/(Q-M),
    (Q-M)/(C-M), M/CH — computed in 30-digit arithmetic and rounded;
    ``residuals`` holds the relative differences against the h-function
    values at θ as the fast evaluator produces them.
    """

    theta: float
    ratios: tuple[float, float, float, float]
    residuals: tuple[float, float, float, float]

    @property
    def max_residual(self) -> float:
        return max(self.residuals)


def identity_residuals(pair: PositivePair) -> IdentityResiduals:
    """Check the four mean-ratio identities behind the main comparisons.

    The mean differences on the left sides cancel catastrophically in
    doubles when a ≈ b (the interesting regime), so the left sides are
    computed with mpmath at 30 significant digits; the right sides use the
    ordinary double-precision evaluator.  The residuals therefore measure
    exactly the error of the fast path.
    """
    if pair.degenerate:
        raise DegeneratePairError("identities need two distinct values")
    theta = substitution_theta(pair)
    v1 = h_eval(SeriesId.H1, theta) - 0.5
    v2 = h_eval(SeriesId.H2, theta)
    v3 = h_eval(SeriesId.H3, theta)
    tf = abs(pair.a - pair.b) / (pair.a + pair.b)
    v4 = 1.0 / (2.0 * tf * math.asinh(tf))

    with mp.workdps(30):
        a, b = mp.mpf(pair.a), mp.mpf(pair.b)
        A = (a + b) / 2
        t = abs(a - b) / (a + b)
        M = A * t / mp.asinh(t)
        C = (a * a + b * b) / (a + b)
        CH = (a - b) ** 2 / (a + b)
        CBAR = 2 * (a * a + a * b + b * b) / (3 * (a + b))
        Q = mp.sqrt((a * a + b * b) / 2)
        r1 = (M - C) / CH
        r2 = (CBAR - M) / (Q - M)
        r3 = (Q - M) / (C - M)
        r4 = M / CH
        pairs = ((r1, v1), (r2, v2), (r3, v3), (r4, v4))
        residuals = tuple(float(abs(v - r) / abs(r)) for r, v in pairs)
        ratios = tuple(float(r) for r, _ in pairs)
    return IdentityResiduals(theta=theta, ratios=ratios, residuals=residuals)


@dataclass(frozen=True)
class ScanVerdict:
    """Result of a strict-monotonicity grid scan of one ratio function."""

    series_id: SeriesId
    direction: str
    grid: int
    passed: bool
    min_gap: float
    first_violation: float | None


def monotonicity_scan(which, grid: int) -> ScanVerdict:
    """Scan h over [θ*/grid, θ*] and [θ*, 10] on uniform grids.

    Consecutive values must move strictly in the function's direction; the
    verdict records the smallest correctly-signed step.  The second range
    goes past θ* because the underlying monotonicity claim is for all
    θ > 0, not just the part that pairs can reach.
    """
    if grid < 2:
        raise ParameterError("grid must be >= 2")
    hf = h_function(which)
    sign = -1.0 if hf.direction == "decreasing" else 1.0
    min_gap = math.inf
    first_violation = None
    for left, right in ((THETA_STAR / grid, THETA_STAR), (THETA_STAR, 10.0)):
        thetas = np.linspace(left, right, grid)
        values = h_eval(hf, thetas)
        gaps = sign * np.diff(values)
        worst = int(np.argmin(gaps))
        min_gap = min(min_gap, float(gaps[worst]))
        if gaps[worst] <= 0.0 and first_violation is None:
            first_violation = float(thetas[worst])
    return ScanVerdict(
        series_id=hf.id,
        direction=hf.direction,
        grid=grid,
        passed=first_violation is None,
        min_gap=min_gap,
        first_violation=first_violation,
    )


def m_to_ch_ratio(t):
    """f(t) = 1/(2t·asinh t): the ratio M/CH as a function of the half-gap t.

    Strictly decreasing on (0, 1) with limit 1/(2 ln(1+√2)) at t → 1⁻,
    which is where the one-sided sharp bound of that comparison comes from.
    Scalar or array, t in (0, 1).
    """
    tt = np.asarray(t, dtype=np.float64)
    if not ((tt > 0.0).all() and (tt < 1.0).all()):
        raise DomainError("the ratio is considered on 0 < t < 1")
    out = 1.0 / (2.0 * tt * np.arcsinh(tt))
    return float(out) if np.ndim(out) == 0 else out


def solve_p0(tol: float = 1e-12) -> float:
    """Solve (p+1)^(1/p) = 2 ln(1+√2) on [1.5, 2.5] by bisection.

    The target function is continuous and changes sign across the bracket;
    bisection to an interval shorter than ``tol`` gives the root to full
    double precision.  Raises BracketError if the bracket ever fails to
    straddle, which would mean the implementation (not the math) is broken.
    """
    target = 2.0 * math.log(1.0 + math.sqrt(2.0))

    def g(p: float) -> float:
        return (p + 1.0) ** (1.0 / p) - target

    lo, hi = 1.5, 2.5
    glo, ghi = g(lo), g(hi)
    if glo == 0.0:
        return lo
    if ghi == 0.0:
        return hi
    if (glo > 0.0) == (ghi > 0.0):
        raise BracketError(f"no sign change on [{lo}, {hi}]: g={glo}, {ghi}")
    while hi - lo >= tol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):  # interval has collapsed to adjacent doubles
            break
        gm = g(mid)
        if gm == 0.0:
            return mid
        if (gm > 0.0) == (glo > 0.0):
            lo, glo = mid, gm
        else:
            hi = mid
    return 0.5 * (lo + hi)
