"""Representing functions and the Kubo-Ando binary operation A sigma_f B.

A connection with representing function f acts on positive matrices as
``A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2}``; it is a mean when f(1) = 1.
The built-in functions cover weighted arithmetic and geometric means,
plain powers, the logarithm (usable in Jensen-type checks but not as a
mean), and pointwise compositions/powers of the above.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import mpmath
import numpy as np

from . import spectral
from .errors import ParameterError, ShapeError
from .spectral import hermitize, pd_root_pair, power_psd

#: Domain shared by every built-in function: the positive half-line.
POSITIVE_HALFLINE = (0.0, math.inf)


@dataclass(frozen=True)
class RepresentingFunction:
    """A scalar function record driving functional calculus and chords.

    ``fn`` evaluates elementwise on floats/ndarrays; ``mp_fn`` is an
    mpmath-safe scalar twin used by the high-precision constant oracle
    (defaults to ``fn`` when plain arithmetic is already exact).
    """

    label: str
    fn: Callable
    deriv: Callable
    domain: tuple[float, float] = POSITIVE_HALFLINE
    operator_monotone: bool = True
    normalized: bool = False
    mp_fn: Callable | None = field(default=None, compare=False)

    def __call__(self, t):
        return self.fn(t)

    def mp(self, t):
        return (self.mp_fn or self.fn)(t)


def arithmetic_w(lam: float) -> RepresentingFunction:
    """t -> (1 - lam) + lam*t, the weighted arithmetic mean generator."""
    if not 0.0 <= lam <= 1.0:
        raise ParameterError(f"weight must be in [0, 1], got {lam}")
    return RepresentingFunction(
        label=f"arith:{lam:g}",
        fn=lambda t: (1.0 - lam) + lam * t,
        deriv=lambda t: lam * np.ones_like(np.asarray(t, dtype=float)),
        operator_monotone=True,
        normalized=True,
    )


def geometric_w(lam: float) -> RepresentingFunction:
    """t -> t^lam, the weighted geometric mean generator."""
    if not 0.0 <= lam <= 1.0:
        raise ParameterError(f"weight must be in [0, 1], got {lam}")
    return RepresentingFunction(
        label=f"geom:{lam:g}",
        fn=lambda t: t**lam,
        deriv=lambda t: lam * t ** (lam - 1.0),
        operator_monotone=True,
        normalized=True,
    )


def power_fn(p: float) -> RepresentingFunction:
    """t -> t^p; operator monotone precisely for p in [0, 1]."""
    return RepresentingFunction(
        label=f"power:{p:g}",
        fn=lambda t: t**p,
        deriv=lambda t: p * t ** (p - 1.0),
        operator_monotone=0.0 <= p <= 1.0,
        normalized=True,
    )


log_fn = RepresentingFunction(
    label="log",
    fn=np.log,
    deriv=lambda t: 1.0 / t,
    operator_monotone=True,
    normalized=False,  # log(1) = 0: concave and operator monotone, not a mean
    mp_fn=mpmath.log,
)


def composed(h: RepresentingFunction, f: RepresentingFunction) -> RepresentingFunction:
    """Pointwise composition t -> h(f(t))."""
    return RepresentingFunction(
        label=f"composed:{h.label}:{f.label}",
        fn=lambda t: h.fn(f.fn(t)),
        deriv=lambda t: h.deriv(f.fn(t)) * f.deriv(t),
        domain=f.domain,
        operator_monotone=h.operator_monotone and f.operator_monotone,
        normalized=bool(f.normalized and h.normalized),
        mp_fn=lambda t: h.mp(f.mp(t)),
    )


def powered(f: RepresentingFunction, p: float) -> RepresentingFunction:
    """Pointwise power t -> f(t)^p; f is evaluated first."""
    return RepresentingFunction(
        label=f"powered:{f.label}:{p:g}",
        fn=lambda t: f.fn(t) ** p,
        deriv=lambda t: p * f.fn(t) ** (p - 1.0) * f.deriv(t),
        domain=f.domain,
        operator_monotone=f.operator_monotone and 0.0 <= p <= 1.0,
        normalized=f.normalized,
        mp_fn=lambda t: f.mp(t) ** p,
    )


def function_from_id(fid: str) -> RepresentingFunction:
    """Resolve a function id such as "arith:0.5", "geom:0.3", "power:0.7",
    "log", "powered:<id>:p" or "composed:power:p:<id>"."""
    if fid == "log":
        return log_fn
    parts = fid.split(":")
    kind = parts[0]
    try:
        if kind == "arith":
            return arithmetic_w(float(parts[1]))
        if kind == "geom":
            return geometric_w(float(parts[1]))
        if kind == "power":
            return power_fn(float(parts[1]))
        if kind == "powered":
            return powered(function_from_id(":".join(parts[1:-1])), float(parts[-1]))
        if kind == "composed":
            if parts[1] != "power":
                raise ParameterError(f"unsupported outer function in {fid!r}")
            return composed(power_fn(float(parts[2])), function_from_id(":".join(parts[3:])))
    except (IndexError, ValueError) as exc:
        raise ParameterError(f"malformed function id {fid!r}") from exc
    raise ParameterError(f"unknown function id {fid!r}")


def require_mean(f: RepresentingFunction) -> RepresentingFunction:
    """A connection is a mean only if its representing function is normalized."""
    if not f.normalized:
        raise ParameterError(f"{f.label!r} is not normalized (f(1) != 1); not a mean")
    return f


def mean(a: np.ndarray, b: np.ndarray, f: RepresentingFunction) -> np.ndarray:
    """A sigma_f B = A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2}.

    A must be positive definite with margin (no silent regularization);
    B may be positive semidefinite.
    """
    require_mean(f)
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ShapeError(f"dimension mismatch: {a.shape} vs {b.shape}")
    root, inv_root = pd_root_pair(a)
    w = hermitize(inv_root @ b @ inv_root)
    fw = spectral.apply_function(w, f.fn, f.domain)
    return hermitize(root @ fw @ root)


def weighted_arithmetic(a: np.ndarray, b: np.ndarray, lam: float) -> np.ndarray:
    """(1 - lam) A + lam B, computed exactly (accepts singular A)."""
    if not 0.0 <= lam <= 1.0:
        raise ParameterError(f"weight must be in [0, 1], got {lam}")
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ShapeError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return hermitize((1.0 - lam) * a + lam * b)


def weighted_geometric(a: np.ndarray, b: np.ndarray, lam: float) -> np.ndarray:
    """A^{1/2} (A^{-1/2} B A^{-1/2})^lam A^{1/2}.

    Direct congruence/power route; agrees with mean(a, b, geometric_w(lam))
    within tolerance, which the tests use as a two-route cross-check.
    """
    if not 0.0 <= lam <= 1.0:
        raise ParameterError(f"weight must be in [0, 1], got {lam}")
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ShapeError(f"dimension mismatch: {a.shape} vs {b.shape}")
    root, inv_root = pd_root_pair(a)
    w = hermitize(inv_root @ b @ inv_root)
    return hermitize(root @ power_psd(w, lam) @ root)
