"""Mond-Pecaric correction constants.

Two routes are provided for every constant: a closed form where one
exists, and an independent oracle that maximizes the defining ratio or
difference over [m, M] with a dense float grid for bracketing followed by
golden-section refinement in high-precision arithmetic.  The two routes
are required to agree to 1e-9 relative, which is what makes the closed
forms trustworthy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .errors import (
    DegenerateIntervalError,
    HypothesisError,
    ParameterError,
    UnboundedRatioError,
    UnimodalityError,
)
from .means import RepresentingFunction, arithmetic_w

ORACLE_DPS = 30  # significant digits inside the oracle
GRID_POINTS = 10_000
GOLDEN_WIDTH = 1e-12  # final bracket width
P_MIN = 1e-3  # exponents p/(p-1) blow up at the endpoints of (0, 1)
MIN_INTERVAL = 1e-12


@dataclass(frozen=True)
class Chord:
    """The secant of f over [m, M]: t -> mu*t + nu interpolating both ends."""

    mu: float
    nu: float
    m: float
    M: float

    def __call__(self, t):
        return self.mu * t + self.nu


@dataclass(frozen=True)
class ConstantResult:
    value: float
    argmax: float
    method: str  # "closed_form" | "oracle"


def _check_interval(m: float, M: float) -> None:
    if not (math.isfinite(m) and math.isfinite(M)):
        raise ParameterError("interval endpoints must be finite")
    if M - m < MIN_INTERVAL:
        raise DegenerateIntervalError(f"interval [{m}, {M}] is degenerate")


def _check_p(p: float) -> None:
    if not P_MIN <= p <= 1.0 - P_MIN:
        raise ParameterError(f"exponent p must lie in [{P_MIN}, {1 - P_MIN}], got {p}")


def chord(f, m: float, M: float) -> Chord:
    """Secant coefficients mu = (f(M)-f(m))/(M-m), nu = (M f(m)-m f(M))/(M-m)."""
    _check_interval(m, M)
    fm = float(f(m))
    fM = float(f(M))
    return Chord(mu=(fM - fm) / (M - m), nu=(M * fm - m * fM) / (M - m), m=m, M=M)


def _golden_max(g, lo, hi):
    """Golden-section maximization of a unimodal g on [lo, hi] (mp arithmetic)."""
    invphi = (mpmath.sqrt(5) - 1) / 2
    a, b = mpmath.mpf(lo), mpmath.mpf(hi)
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    gc, gd = g(c), g(d)
    while b - a > GOLDEN_WIDTH:
        if gc > gd:
            b, d, gd = d, c, gc
            c = b - invphi * (b - a)
            gc = g(c)
        else:
            a, c, gc = c, d, gd
            d = a + invphi * (b - a)
            gd = g(d)
    x = (a + b) / 2
    return x, g(x)


def _oracle_max(f: RepresentingFunction, m: float, M: float, objective: str) -> ConstantResult:
    """Maximize f/chord ("ratio") or f - chord ("difference") over [m, M].

    A 10^4-point float grid brackets the maximizer; golden-section then
    refines it in mp arithmetic down to a 1e-12 bracket.  Concavity of f
    makes both objectives unimodal; the refined value is still guarded
    against the raw grid maximum.
    """
    _check_interval(m, M)
    grid = np.linspace(m, M, GRID_POINTS)
    fvals = np.asarray(f.fn(grid), dtype=float)
    with mpmath.workdps(ORACLE_DPS):
        fm, fM = f.mp(mpmath.mpf(m)), f.mp(mpmath.mpf(M))
        mu = (fM - fm) / (M - m)
        nu = (M * fm - m * fM) / (M - m)
        if objective == "ratio":
            if f.mp(m) <= 0 or f.mp(M) <= 0:
                raise UnboundedRatioError("ratio objective needs f > 0 on [m, M]")
            if mu * m + nu <= 0 or mu * M + nu <= 0:
                raise UnboundedRatioError("chord vanishes on [m, M]; ratio unbounded")
            g = lambda t: f.mp(t) / (mu * t + nu)
            gvals = fvals / (float(mu) * grid + float(nu))
        else:
            g = lambda t: f.mp(t) - (mu * t + nu)
            gvals = fvals - (float(mu) * grid + float(nu))
        i = int(np.argmax(gvals))
        lo = grid[max(i - 2, 0)]
        hi = grid[min(i + 2, GRID_POINTS - 1)]
        x, val = _golden_max(g, lo, hi)
        value = float(val)
        argmax = float(x)
    grid_max = float(gvals.max())
    if grid_max > value + 1e-9 * (1.0 + abs(value)):
        raise UnimodalityError(
            f"refined maximum {value!r} fell below grid maximum {grid_max!r}"
        )
    return ConstantResult(value=max(value, grid_max), argmax=argmax, method="oracle")


def gamma(f: RepresentingFunction, m: float, M: float) -> ConstantResult:
    """gamma_f = max of f(t) / (mu_f t + nu_f) over [m, M] (oracle route)."""
    return _oracle_max(f, m, M, "ratio")


def beta(f: RepresentingFunction, m: float, M: float) -> ConstantResult:
    """beta_f = max of f(t) - mu_f t - nu_f over [m, M] (oracle route)."""
    return _oracle_max(f, m, M, "difference")


def gamma_power(a: float, b: float, p: float) -> ConstantResult:
    """Closed form of gamma for h(t) = t^p over [a, b] with 0 < a < b.

    Used with [a, b] = [f(m), f(M)] when a power is applied on top of a
    mean; the maximizer is the stationary point of t^p / (mu t + nu).
    """
    if not 0.0 < a < b:
        raise ParameterError(f"need 0 < a < b, got a={a}, b={b}")
    _check_interval(a, b)
    _check_p(p)
    mu = (b**p - a**p) / (b - a)
    nu = (b * a**p - a * b**p) / (b - a)
    t_star = p * nu / ((1.0 - p) * mu)
    value = (
        p**p * (b - a) * (b * a**p - a * b**p) ** (p - 1.0)
        / ((1.0 - p) ** (p - 1.0) * (b**p - a**p) ** p)
    )
    return ConstantResult(value=value, argmax=t_star, method="closed_form")


def t_star(m: float, M: float, p: float) -> float:
    """Maximizer of (1-t)^p minus its chord over [m, M]."""
    if not 0.0 <= m < M <= 1.0:
        raise HypothesisError(f"need 0 <= m < M <= 1, got m={m}, M={M}")
    _check_interval(m, M)
    _check_p(p)
    k = ((1.0 - m) ** p - (1.0 - M) ** p) / (p * (M - m))
    return 1.0 - k ** (1.0 / (p - 1.0))


def delta_bellman(m: float, M: float, p: float) -> ConstantResult:
    """Closed form of beta for f(t) = (1-t)^p over [m, M] in [0, 1].

    M = 1 is accepted here because the formula stays finite in that limit
    (it degenerates to (1-p) p^{p/(1-p)} (1-m)^p); inequality checkers
    enforce the strict hypothesis M < 1 themselves.
    """
    if not 0.0 <= m < M <= 1.0:
        raise HypothesisError(f"need 0 <= m < M <= 1, got m={m}, M={M}")
    _check_interval(m, M)
    _check_p(p)
    k = ((1.0 - m) ** p - (1.0 - M) ** p) / (p * (M - m))
    value = (1.0 - p) * k ** (p / (p - 1.0)) + (
        (1.0 - M) * (1.0 - m) ** p - (1.0 - m) * (1.0 - M) ** p
    ) / (M - m)
    return ConstantResult(value=value, argmax=t_star(m, M, p), method="closed_form")


def zeta_aczel(m: float, M: float, p: float) -> ConstantResult:
    """Closed form of beta for f(t) = t^p over [m, M] with m > 0."""
    if m <= 0.0:
        raise ParameterError(f"need m > 0, got m={m}")
    _check_interval(m, M)
    _check_p(p)
    mu = (M**p - m**p) / (M - m)
    nu = (M * m**p - m * M**p) / (M - m)
    value = (1.0 - p) * (mu / p) ** (p / (p - 1.0)) - nu
    argmax = (mu / p) ** (1.0 / (p - 1.0))
    return ConstantResult(value=value, argmax=argmax, method="closed_form")


def log_mean(a: float, b: float) -> float:
    """Logarithmic mean: (b-a)/(log b - log a), with the a = b limit."""
    if a <= 0.0 or b <= 0.0:
        raise ParameterError(f"logarithmic mean needs positive inputs, got {a}, {b}")
    if a == b:
        return float(a)
    return (b - a) / (math.log(b) - math.log(a))


def beta_log(m: float, M: float) -> ConstantResult:
    """Closed form of beta for f = log over [m, M] with m > 0.

    Equals log((1/e) (M^m / m^M)^{1/(M-m)} L(m, M)); evaluated through
    logarithms for stability.  The maximizer is the logarithmic mean.
    """
    if m <= 0.0:
        raise ParameterError(f"need m > 0, got m={m}")
    _check_interval(m, M)
    ell = log_mean(m, M)
    value = math.log(ell) - 1.0 + (m * math.log(M) - M * math.log(m)) / (M - m)
    return ConstantResult(value=value, argmax=ell, method="closed_form")


def delta_affine_power(lam: float, m: float, M: float, p: float) -> ConstantResult:
    """Power-of-affine reverse constant: gamma of t^p over [f(m), f(M)] with
    f(t) = (1-lam) + lam*t."""
    if not 0.0 < m < M:
        raise ParameterError(f"need 0 < m < M, got m={m}, M={M}")
    if not 0.0 < lam <= 1.0:
        raise DegenerateIntervalError(
            f"weight lam={lam} collapses [f(m), f(M)] to a point"
        )
    f = arithmetic_w(lam)
    return gamma_power(float(f(m)), float(f(M)), p)
