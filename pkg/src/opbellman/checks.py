"""One checkable statement per inequality.

Each checker re-verifies the stated hypotheses on its instance, evaluates
both sides, and returns a :class:`CheckOutcome` whose ``slack`` is the
smallest eigenvalue of (dominant side minus dominated side).  A failed
hypothesis or power-domain guard yields ``not_applicable`` with the guard
named in the witness; ``violated`` is reserved for instances that satisfy
every hypothesis yet fail the final comparison.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import mpmath
import numpy as np

from . import constants
from .errors import (
    ConditioningError,
    DegenerateIntervalError,
    DomainError,
    ParameterError,
    UnboundedRatioError,
)
from .instances import InstanceFamily
from .means import (
    RepresentingFunction,
    arithmetic_w,
    function_from_id,
    geometric_w,
    mean,
    powered,
    weighted_arithmetic,
)
from .positive_maps import WeightedFamily, block_diag
from .spectral import (
    DEFAULT_TOL,
    Tolerance,
    apply_function,
    eig,
    hermitize,
    identity,
    loewner_leq,
)

HOLDS = "holds"
VIOLATED = "violated"
NOT_APPLICABLE = "not_applicable"

SCALAR_DPS = 30


@dataclass(frozen=True)
class CheckOutcome:
    """Verdict of one inequality on one instance."""

    check_id: str
    status: str
    slack: float
    scale: float
    witness: dict | None = None
    chain_slacks: tuple[float, ...] | None = None


class _GuardFail(Exception):
    def __init__(self, guard: str):
        super().__init__(guard)
        self.guard = guard


def _require(cond: bool, guard: str) -> None:
    if not cond:
        raise _GuardFail(guard)


def _na(check_id: str, guard: str) -> CheckOutcome:
    return CheckOutcome(check_id, NOT_APPLICABLE, math.nan, math.nan, witness={"guard": guard})


def _checker(check_id: str):
    def deco(fn):
        @functools.wraps(fn)
        def wrapped(inst, params, tol: Tolerance = DEFAULT_TOL) -> CheckOutcome:
            try:
                return fn(inst, params, tol)
            except _GuardFail as g:
                return _na(check_id, g.guard)

        wrapped.check_id = check_id
        return wrapped

    return deco


def _compare(check_id, dominant, dominated, tol, chain=None) -> CheckOutcome:
    v = loewner_leq(dominated, dominant, tol)
    return CheckOutcome(
        check_id=check_id,
        status=HOLDS if v.holds else VIOLATED,
        slack=v.slack,
        scale=v.scale,
        chain_slacks=chain,
    )


def _chain_outcome(check_id, t1, t2, t3, tol) -> CheckOutcome:
    l1 = loewner_leq(t1, t2, tol)
    l2 = loewner_leq(t2, t3, tol)
    holds = l1.holds and l2.holds
    return CheckOutcome(
        check_id=check_id,
        status=HOLDS if holds else VIOLATED,
        slack=min(l1.slack, l2.slack),
        scale=max(l1.scale, l2.scale),
        chain_slacks=(l1.slack, l2.slack),
    )


# -- guarded numerics ------------------------------------------------------


def _mean_g(a, b, f, guard: str):
    try:
        return mean(a, b, f)
    except (ConditioningError, DomainError):
        raise _GuardFail(guard) from None


def _fcalc_g(h, f: RepresentingFunction, guard: str):
    try:
        return apply_function(h, f.fn, f.domain)
    except DomainError:
        raise _GuardFail(guard) from None


def _power_guarded(base, p: float, tol: Tolerance, guard: str):
    """base^p after an independent PSD check; tolerated negative eigenvalues
    (within the comparison margin) are clipped to zero."""
    lam, u = eig(base)
    norm = float(np.abs(lam).max(initial=0.0))
    _require(float(lam[0]) >= -tol.margin(norm), guard)
    lam = np.clip(lam, 0.0, None)
    if p == 0.0:
        return identity(base.shape[0])
    return hermitize((u * lam**p) @ u.conj().T)


def _log_guarded(base, tol: Tolerance, guard: str):
    lam, u = eig(base)
    _require(float(lam[0]) > 0.0, guard)
    return hermitize((u * np.log(lam)) @ u.conj().T)


# -- hypothesis re-verification --------------------------------------------


def _guard_window(mats, m, M, tol, name="spectrum_window"):
    eye = identity(mats[0].shape[0])
    for a in mats:
        _require(loewner_leq(m * eye, a, tol).holds, f"{name}_below_m")
        _require(loewner_leq(a, M * eye, tol).holds, f"{name}_above_M")


def _guard_pair_sandwich(pairs, m, M, tol, name="pair_sandwich"):
    for a, b in pairs:
        _require(loewner_leq(m * a, b, tol).holds, f"{name}_lower")
        _require(loewner_leq(b, M * a, tol).holds, f"{name}_upper")


def _guard_psd(x, tol, guard):
    zero = np.zeros_like(x)
    _require(loewner_leq(zero, x, tol).holds, guard)


def _guard_pd_floor(x, guard, rel_floor=1e-7):
    lam = np.linalg.eigvalsh(hermitize(x))
    _require(float(lam[0]) >= rel_floor * max(float(lam[-1]), 1e-300), guard)


def _complement_guards(inst, gamma_value, m, M, tol):
    eye = identity(inst.A[0].shape[0])
    _guard_pair_sandwich(zip(inst.A, inst.B), m, M, tol)
    comp_a = hermitize(eye - gamma_value * sum(inst.A))
    comp_b = hermitize(eye - gamma_value * sum(inst.B))
    _guard_pd_floor(comp_a, "complement_a_not_pd")
    _guard_pd_floor(comp_b, "complement_b_not_pd")
    _require(loewner_leq(m * comp_a, comp_b, tol).holds, "complement_sandwich_lower")
    _require(loewner_leq(comp_b, M * comp_a, tol).holds, "complement_sandwich_upper")


def _resolve_f(params) -> RepresentingFunction:
    f = params["f"]
    return function_from_id(f) if isinstance(f, str) else f


# -- memoized constants -----------------------------------------------------


@functools.lru_cache(maxsize=4096)
def _gamma_cached(label: str, m: float, M: float) -> float:
    return constants.gamma(function_from_id(label), m, M).value


@functools.lru_cache(maxsize=4096)
def _beta_cached(label: str, m: float, M: float) -> float:
    return constants.beta(function_from_id(label), m, M).value


def _gamma_guarded(f, m, M) -> float:
    try:
        return _gamma_cached(f.label, m, M)
    except UnboundedRatioError:
        raise _GuardFail("chord_not_positive") from None


# -- forward checks ---------------------------------------------------------


@_checker("bellman_map")
def check_bellman_map(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """(Phi(I - sum w_j A_j))^p >= Phi(sum w_j (I - A_j)^p) for contractions
    0 <= A_j <= I."""
    p = params["p"]
    eye = identity(inst.A[0].shape[0])
    _guard_window(inst.A, 0.0, 1.0, tol, "contraction_window")
    phi = inst.maps[0]
    w = inst.weights
    avg = hermitize(sum(wj * a for wj, a in zip(w, inst.A)))
    dominant = _power_guarded(hermitize(phi.apply(eye - avg)), p, tol, "map_base_not_psd")
    inner = sum(
        wj * _power_guarded(hermitize(eye - a), p, tol, "member_base_not_psd")
        for wj, a in zip(w, inst.A)
    )
    dominated = hermitize(phi.apply(inner))
    return _compare("bellman_map", dominant, dominated, tol)


@_checker("bellman_mean")
def check_bellman_mean(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """(I - sum A_j) sigma_{f^p} (I - sum B_j) <= (I - sum A_j sigma_f B_j)^p
    for subidentity families."""
    f = _resolve_f(params)
    p = params["p"]
    eye = identity(inst.A[0].shape[0])
    for mats in (inst.A, inst.B):
        for x in mats:
            _guard_psd(x, tol, "member_not_psd")
        _guard_psd(eye - sum(mats), tol, "sum_exceeds_identity")
    comp_a = hermitize(eye - sum(inst.A))
    comp_b = hermitize(eye - sum(inst.B))
    _guard_pd_floor(comp_a, "complement_a_not_pd")
    dominated = _mean_g(comp_a, comp_b, powered(f, p), "mean_conditioning")
    base = hermitize(eye - sum(mean(a, b, f) for a, b in zip(inst.A, inst.B)))
    dominant = _power_guarded(base, p, tol, "rhs_base_not_psd")
    return _compare("bellman_mean", dominant, dominated, tol)


@_checker("jensen_map")
def check_jensen_map(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """Choi-Davis-Jensen: Phi(f(A)) <= f(Phi(A)) for operator concave f."""
    f = _resolve_f(params)
    m, M = params["m"], params["M"]
    _require(f.operator_monotone, "not_operator_concave")
    x = inst.A[0]
    _guard_window([x], m, M, tol)
    phi = inst.maps[0]
    dominated = hermitize(phi.apply(_fcalc_g(x, f, "function_domain")))
    dominant = _fcalc_g(hermitize(phi.apply(x)), f, "image_function_domain")
    return _compare("jensen_map", dominant, dominated, tol)


@_checker("mean_superadditive")
def check_mean_superadditive(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """sum_j (X_j sigma_f Y_j) <= (sum X_j) sigma_f (sum Y_j)."""
    f = _resolve_f(params)
    for x in list(inst.A) + list(inst.B):
        _guard_psd(x, tol, "member_not_psd")
    dominated = hermitize(sum(_mean_g(a, b, f, "mean_conditioning") for a, b in zip(inst.A, inst.B)))
    dominant = _mean_g(hermitize(sum(inst.A)), hermitize(sum(inst.B)), f, "mean_conditioning")
    return _compare("mean_superadditive", dominant, dominated, tol)


@_checker("mean_remainder")
def check_mean_remainder(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """(A - sum A_j) sigma_f (B - sum B_j) <= A sigma_f B - sum A_j sigma_f B_j."""
    f = _resolve_f(params)
    a_total = inst.aux["A_total"]
    b_total = inst.aux["B_total"]
    _guard_psd(a_total - sum(inst.A), tol, "A_sum_exceeds_total")
    _guard_psd(b_total - sum(inst.B), tol, "B_sum_exceeds_total")
    rem_a = hermitize(a_total - sum(inst.A))
    rem_b = hermitize(b_total - sum(inst.B))
    _guard_pd_floor(rem_a, "remainder_not_pd")
    dominated = _mean_g(rem_a, rem_b, f, "mean_conditioning")
    dominant = hermitize(
        _mean_g(a_total, b_total, f, "mean_conditioning")
        - sum(_mean_g(a, b, f, "mean_conditioning") for a, b in zip(inst.A, inst.B))
    )
    return _compare("mean_remainder", dominant, dominated, tol)


@_checker("mean_power_compose")
def check_mean_power_compose(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """A sigma_{f^p} B <= (A sigma_f B)^p for a positive-definite contraction A."""
    f = _resolve_f(params)
    p = params["p"]
    a, b = inst.A[0], inst.B[0]
    _guard_window([a], 0.0, 1.0, tol, "contraction_window")
    _guard_pd_floor(a, "contraction_not_pd")
    _guard_psd(b, tol, "second_operand_not_psd")
    dominated = _mean_g(a, b, powered(f, p), "mean_conditioning")
    dominant = _power_guarded(_mean_g(a, b, f, "mean_conditioning"), p, tol, "mean_base_not_psd")
    return _compare("mean_power_compose", dominant, dominated, tol)


# -- ratio (multiplicative) reverses ----------------------------------------


@_checker("jensen_ratio_reverse")
def check_jensen_ratio_reverse(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """gamma_f Phi(f(A)) >= f(Phi(A)) for concave f with positive chord."""
    f = _resolve_f(params)
    m, M = params["m"], params["M"]
    x = inst.A[0]
    _guard_window([x], m, M, tol)
    g = _gamma_guarded(f, m, M)
    phi = inst.maps[0]
    dominant = hermitize(g * phi.apply(_fcalc_g(x, f, "function_domain")))
    dominated = _fcalc_g(hermitize(phi.apply(x)), f, "image_function_domain")
    return _compare("jensen_ratio_reverse", dominant, dominated, tol)


@_checker("mean_map_ratio_reverse")
def check_mean_map_ratio_reverse(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """gamma_f Psi(A sigma_f B) >= Psi(A) sigma_f Psi(B) under m A <= B <= M A."""
    f = _resolve_f(params)
    m, M = params["m"], params["M"]
    x, y = inst.A[0], inst.B[0]
    _guard_pd_floor(x, "first_operand_not_pd")
    _guard_pair_sandwich([(x, y)], m, M, tol)
    g = _gamma_guarded(f, m, M)
    psi = inst.maps[0]
    dominant = hermitize(g * psi.apply(_mean_g(x, y, f, "mean_conditioning")))
    px = hermitize(psi.apply(x))
    py = hermitize(psi.apply(y))
    _guard_pd_floor(px, "mapped_operand_not_pd")
    dominated = _mean_g(px, py, f, "mean_conditioning")
    return _compare("mean_map_ratio_reverse", dominant, dominated, tol)


@_checker("mean_sum_ratio_reverse")
def check_mean_sum_ratio_reverse(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """gamma_f sum_j (A_j sigma_f B_j) >= (sum A_j) sigma_f (sum B_j)."""
    f = _resolve_f(params)
    m, M = params["m"], params["M"]
    _guard_pair_sandwich(zip(inst.A, inst.B), m, M, tol)
    g = _gamma_guarded(f, m, M)
    dominant = hermitize(g * sum(_mean_g(a, b, f, "mean_conditioning") for a, b in zip(inst.A, inst.B)))
    dominated = _mean_g(hermitize(sum(inst.A)), hermitize(sum(inst.B)), f, "mean_conditioning")
    return _compare("mean_sum_ratio_reverse", dominant, dominated, tol)


@_checker("bellman_ratio_reverse")
def check_bellman_ratio_reverse(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """gamma^p ((I - sum A_j) sigma_f (I - sum B_j))^p
    >= (I - gamma sum A_j sigma_f B_j)^p on gamma-complement sandwiches."""
    f = _resolve_f(params)
    m, M, p = params["m"], params["M"], params["p"]
    _require(m < 1.0 < M, "window_not_straddling_one")
    g = _gamma_guarded(f, m, M)
    _complement_guards(inst, g, m, M, tol)
    eye = identity(inst.A[0].shape[0])
    comp_a = hermitize(eye - sum(inst.A))
    comp_b = hermitize(eye - sum(inst.B))
    _guard_pd_floor(comp_a, "complement_a_not_pd")
    lhs_base = _mean_g(comp_a, comp_b, f, "mean_conditioning")
    dominant = g**p * _power_guarded(lhs_base, p, tol, "lhs_base_not_psd")
    rhs_base = hermitize(eye - g * sum(mean(a, b, f) for a, b in zip(inst.A, inst.B)))
    dominated = _power_guarded(rhs_base, p, tol, "rhs_base_not_psd")
    return _compare("bellman_ratio_reverse", dominant, dominated, tol)


@_checker("compression_ratio_reverse")
def check_compression_ratio_reverse(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """gamma_f [C* f(X) C + f(m)(I - C*C)] >= f(C* X C) for a contraction C."""
    from .spectral import is_contraction

    f = _resolve_f(params)
    m, M = params["m"], params["M"]
    x = inst.A[0]
    c = inst.aux["C"]
    _require(is_contraction(c, tol).holds, "not_a_contraction")
    _require(f.operator_monotone, "not_operator_monotone")
    _guard_window([x], m, M, tol)
    g = _gamma_guarded(f, m, M)
    eye = identity(x.shape[0])
    compressed = hermitize(c.conj().T @ x @ c)
    dominated = _fcalc_g(compressed, f, "compressed_spectrum_outside_domain")
    fm = float(f(m))
    dominant = hermitize(
        g * (c.conj().T @ _fcalc_g(x, f, "function_domain") @ c + fm * (eye - c.conj().T @ c))
    )
    return _compare("compression_ratio_reverse", dominant, dominated, tol)


@_checker("mean_power_ratio_reverse")
def check_mean_power_ratio_reverse(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """gamma_h [f(m)^p (I - A) + A sigma_{f^p} B] >= (A sigma_f B)^p for a
    positive-definite contraction A with m A <= B <= M A and h = t^p."""
    f = _resolve_f(params)
    m, M, p = params["m"], params["M"], params["p"]
    a, b = inst.A[0], inst.B[0]
    _guard_window([a], 0.0, 1.0, tol, "contraction_window")
    _guard_pd_floor(a, "contraction_not_pd")
    _guard_pair_sandwich([(a, b)], m, M, tol)
    fm, fM = float(f(m)), float(f(M))
    try:
        gh = constants.gamma_power(fm, fM, p).value
    except ParameterError:
        raise _GuardFail("degenerate_power_interval") from None
    eye = identity(a.shape[0])
    dominated = _power_guarded(_mean_g(a, b, f, "mean_conditioning"), p, tol, "mean_base_not_psd")
    dominant = hermitize(gh * (fm**p * (eye - a) + _mean_g(a, b, powered(f, p), "mean_conditioning")))
    return _compare("mean_power_ratio_reverse", dominant, dominated, tol)


@_checker("bellman_arith_reverse")
def check_bellman_arith_reverse(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """delta [f(m)^p sum A_j + (I - sum A_j) sigma_{f^p} (I - sum B_j)]
    >= (I - sum A_j nabla_lam B_j)^p with affine f = (1-lam) + lam t."""
    lam = params["lam"]
    m, M, p = params["m"], params["M"], params["p"]
    _require(m < 1.0 < M, "window_not_straddling_one")
    f = arithmetic_w(lam)
    _complement_guards(inst, 1.0, m, M, tol)
    try:
        delta = constants.delta_affine_power(lam, m, M, p).value
    except (ParameterError, DegenerateIntervalError):
        raise _GuardFail("degenerate_power_interval") from None
    eye = identity(inst.A[0].shape[0])
    comp_a = hermitize(eye - sum(inst.A))
    comp_b = hermitize(eye - sum(inst.B))
    _guard_pd_floor(comp_a, "complement_a_not_pd")
    fm = float(f(m))
    dominant = hermitize(
        delta
        * (fm**p * sum(inst.A) + _mean_g(comp_a, comp_b, powered(f, p), "mean_conditioning"))
    )
    rhs_base = hermitize(eye - sum(weighted_arithmetic(a, b, lam) for a, b in zip(inst.A, inst.B)))
    dominated = _power_guarded(rhs_base, p, tol, "rhs_base_not_psd")
    return _compare("bellman_arith_reverse", dominant, dominated, tol)


# -- difference (additive) reverses ------------------------------------------


@_checker("jensen_diff_reverse")
def check_jensen_diff_reverse(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """beta_f I + Phi(f(A)) >= f(Phi(A))."""
    f = _resolve_f(params)
    m, M = params["m"], params["M"]
    x = inst.A[0]
    _guard_window([x], m, M, tol)
    beta = _beta_cached(f.label, m, M)
    phi = inst.maps[0]
    out_eye = identity(phi.output_dim)
    dominant = hermitize(beta * out_eye + phi.apply(_fcalc_g(x, f, "function_domain")))
    dominated = _fcalc_g(hermitize(phi.apply(x)), f, "image_function_domain")
    return _compare("jensen_diff_reverse", dominant, dominated, tol)


@_checker("mean_map_diff_reverse")
def check_mean_map_diff_reverse(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """beta_f Psi(X) + Psi(X sigma_f Y) >= Psi(X) sigma_f Psi(Y)."""
    f = _resolve_f(params)
    m, M = params["m"], params["M"]
    x, y = inst.A[0], inst.B[0]
    _guard_pd_floor(x, "first_operand_not_pd")
    _guard_pair_sandwich([(x, y)], m, M, tol)
    beta = _beta_cached(f.label, m, M)
    psi = inst.maps[0]
    px = hermitize(psi.apply(x))
    py = hermitize(psi.apply(y))
    _guard_pd_floor(px, "mapped_operand_not_pd")
    dominant = hermitize(beta * px + psi.apply(_mean_g(x, y, f, "mean_conditioning")))
    dominated = _mean_g(px, py, f, "mean_conditioning")
    return _compare("mean_map_diff_reverse", dominant, dominated, tol)


@_checker("mean_sum_diff_reverse")
def check_mean_sum_diff_reverse(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """beta_f sum X_j + sum (X_j sigma_f Y_j) >= (sum X_j) sigma_f (sum Y_j)."""
    f = _resolve_f(params)
    m, M = params["m"], params["M"]
    _guard_pair_sandwich(zip(inst.A, inst.B), m, M, tol)
    beta = _beta_cached(f.label, m, M)
    dominant = hermitize(
        beta * sum(inst.A)
        + sum(_mean_g(a, b, f, "mean_conditioning") for a, b in zip(inst.A, inst.B))
    )
    dominated = _mean_g(hermitize(sum(inst.A)), hermitize(sum(inst.B)), f, "mean_conditioning")
    return _compare("mean_sum_diff_reverse", dominant, dominated, tol)


@_checker("bellman_diff_reverse")
def check_bellman_diff_reverse(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """(beta_f + (I - sum A_j) sigma_f (I - sum B_j))^p
    >= (I - sum A_j sigma_f B_j)^p on plain complement sandwiches."""
    f = _resolve_f(params)
    m, M, p = params["m"], params["M"], params["p"]
    _require(m < 1.0 < M, "window_not_straddling_one")
    _complement_guards(inst, 1.0, m, M, tol)
    beta = _beta_cached(f.label, m, M)
    eye = identity(inst.A[0].shape[0])
    comp_a = hermitize(eye - sum(inst.A))
    comp_b = hermitize(eye - sum(inst.B))
    _guard_pd_floor(comp_a, "complement_a_not_pd")
    lhs_base = hermitize(beta * eye + _mean_g(comp_a, comp_b, f, "mean_conditioning"))
    dominant = _power_guarded(lhs_base, p, tol, "lhs_base_not_psd")
    rhs_base = hermitize(eye - sum(mean(a, b, f) for a, b in zip(inst.A, inst.B)))
    dominated = _power_guarded(rhs_base, p, tol, "rhs_base_not_psd")
    return _compare("bellman_diff_reverse", dominant, dominated, tol)


@_checker("aczel_reverse")
def check_aczel_reverse(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """(zeta + (I - sum A_j) #_lam (I - sum B_j))^p >= (I - sum A_j #_lam B_j)^p."""
    lam = params["lam"]
    m, M, p = params["m"], params["M"], params["p"]
    _require(m < 1.0 < M, "window_not_straddling_one")
    f = geometric_w(lam)
    _complement_guards(inst, 1.0, m, M, tol)
    zeta = constants.zeta_aczel(m, M, p).value
    eye = identity(inst.A[0].shape[0])
    comp_a = hermitize(eye - sum(inst.A))
    comp_b = hermitize(eye - sum(inst.B))
    _guard_pd_floor(comp_a, "complement_a_not_pd")
    lhs_base = hermitize(zeta * eye + _mean_g(comp_a, comp_b, f, "mean_conditioning"))
    dominant = _power_guarded(lhs_base, p, tol, "lhs_base_not_psd")
    rhs_base = hermitize(eye - sum(mean(a, b, f) for a, b in zip(inst.A, inst.B)))
    dominated = _power_guarded(rhs_base, p, tol, "rhs_base_not_psd")
    return _compare("aczel_reverse", dominant, dominated, tol)


@_checker("jensen_family_diff_reverse")
def check_jensen_family_diff_reverse(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """beta_f I + sum w_j Phi_j(f(A_j)) >= f(sum w_j Phi_j(A_j))."""
    f = _resolve_f(params)
    m, M = params["m"], params["M"]
    _guard_window(inst.A, m, M, tol)
    beta = _beta_cached(f.label, m, M)
    fam = WeightedFamily(inst.weights, tuple(inst.maps))
    out_eye = identity(fam.output_dim)
    f_blocks = block_diag([_fcalc_g(a, f, "function_domain") for a in inst.A])
    dominant = hermitize(beta * out_eye + fam.apply(f_blocks))
    mapped = hermitize(fam.apply(block_diag(inst.A)))
    dominated = _fcalc_g(mapped, f, "image_function_domain")
    return _compare("jensen_family_diff_reverse", dominant, dominated, tol)


@_checker("bellman_family_reverse")
def check_bellman_family_reverse(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """delta I + sum w_j Phi_j((I - A_j)^p) >= (sum w_j Phi_j(I - A_j))^p for
    contractions with 0 <= m I <= A_j <= M I < I."""
    m, M, p = params["m"], params["M"], params["p"]
    _require(0.0 <= m < M < 1.0, "window_not_in_unit_interval")
    _guard_window(inst.A, m, M, tol)
    delta = constants.delta_bellman(m, M, p).value
    eye = identity(inst.A[0].shape[0])
    fam = WeightedFamily(inst.weights, tuple(inst.maps))
    out_eye = identity(fam.output_dim)
    powers = block_diag(
        [_power_guarded(hermitize(eye - a), p, tol, "member_base_not_psd") for a in inst.A]
    )
    dominant = hermitize(delta * out_eye + fam.apply(powers))
    mapped = hermitize(fam.apply(block_diag([hermitize(eye - a) for a in inst.A])))
    dominated = _power_guarded(mapped, p, tol, "mapped_base_not_psd")
    return _compare("bellman_family_reverse", dominant, dominated, tol)


@_checker("log_family_reverse")
def check_log_family_reverse(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """log-mean constant + Phi(sum w_j log A_j) >= log(sum w_j Phi(A_j))."""
    m, M = params["m"], params["M"]
    _require(m > 0.0, "window_not_positive")
    _guard_window(inst.A, m, M, tol)
    c = constants.beta_log(m, M).value
    phi = inst.maps[0]
    out_eye = identity(phi.output_dim)
    w = inst.weights
    logs = hermitize(sum(wj * _log_guarded(a, tol, "member_not_pd") for wj, a in zip(w, inst.A)))
    dominant = hermitize(c * out_eye + phi.apply(logs))
    mixed = hermitize(sum(wj * phi.apply(a) for wj, a in zip(w, inst.A)))
    dominated = _log_guarded(mixed, tol, "mapped_operand_not_pd")
    return _compare("log_family_reverse", dominant, dominated, tol)


# -- refinement chains -------------------------------------------------------


def _subidentity_guards(inst, tol):
    eye = identity(inst.A[0].shape[0])
    for mats, tag in ((inst.A, "A"), (inst.B, "B")):
        for x in mats:
            _guard_psd(x, tol, f"{tag}_member_not_psd")
        _guard_psd(eye - sum(mats), tol, f"{tag}_sum_exceeds_identity")


@_checker("bellman_chain_split")
def check_bellman_chain_split(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """(I - sum A) sigma_{f^p} (I - sum B)
    <= ((I - sum_{j<=k} A) sigma_f (I - sum_{j<=k} B) - sum_{j>k} A_j sigma_f B_j)^p
    <= (I - sum_j A_j sigma_f B_j)^p."""
    f = _resolve_f(params)
    p, k = params["p"], params["k"]
    n = len(inst.A)
    _require(1 <= k <= n - 1, "split_index_out_of_range")
    _subidentity_guards(inst, tol)
    eye = identity(inst.A[0].shape[0])
    comp_a = hermitize(eye - sum(inst.A))
    comp_b = hermitize(eye - sum(inst.B))
    _guard_pd_floor(comp_a, "complement_a_not_pd")
    t1 = _mean_g(comp_a, comp_b, powered(f, p), "mean_conditioning")
    head_a = hermitize(eye - sum(inst.A[:k]))
    head_b = hermitize(eye - sum(inst.B[:k]))
    _guard_pd_floor(head_a, "head_complement_not_pd")
    pair_means = [mean(a, b, f) for a, b in zip(inst.A, inst.B)]
    mid_base = hermitize(_mean_g(head_a, head_b, f, "mean_conditioning") - sum(pair_means[k:]))
    t2 = _power_guarded(mid_base, p, tol, "mid_base_not_psd")
    t3 = _power_guarded(hermitize(eye - sum(pair_means)), p, tol, "rhs_base_not_psd")
    return _chain_outcome("bellman_chain_split", t1, t2, t3, tol)


@_checker("bellman_chain_interp")
def check_bellman_chain_interp(inst: InstanceFamily, params, tol) -> CheckOutcome:
    """((I - sum A) sigma_f (I - sum B))^p
    <= ((I - sum t_j A_j) sigma_f (I - sum t_j B_j) - sum (1 - t_j) A_j sigma_f B_j)^p
    <= (I - sum_j A_j sigma_f B_j)^p with t_j in [0, 1]."""
    f = _resolve_f(params)
    p = params["p"]
    t = np.asarray(params["t"], dtype=float)
    n = len(inst.A)
    _require(t.size == n and np.all((0.0 <= t) & (t <= 1.0)), "interpolants_outside_unit")
    _subidentity_guards(inst, tol)
    eye = identity(inst.A[0].shape[0])
    comp_a = hermitize(eye - sum(inst.A))
    comp_b = hermitize(eye - sum(inst.B))
    _guard_pd_floor(comp_a, "complement_a_not_pd")
    t1 = _power_guarded(_mean_g(comp_a, comp_b, f, "mean_conditioning"), p, tol, "lhs_base_not_psd")
    part_a = hermitize(eye - sum(tj * a for tj, a in zip(t, inst.A)))
    part_b = hermitize(eye - sum(tj * b for tj, b in zip(t, inst.B)))
    _guard_pd_floor(part_a, "partial_complement_not_pd")
    pair_means = [mean(a, b, f) for a, b in zip(inst.A, inst.B)]
    mid_base = hermitize(
        _mean_g(part_a, part_b, f, "mean_conditioning")
        - sum((1.0 - tj) * pm for tj, pm in zip(t, pair_means))
    )
    t2 = _power_guarded(mid_base, p, tol, "mid_base_not_psd")
    t3 = _power_guarded(hermitize(eye - sum(pair_means)), p, tol, "rhs_base_not_psd")
    return _chain_outcome("bellman_chain_interp", t1, t2, t3, tol)


# -- scalar suite ------------------------------------------------------------


def _scalar_outcome(check_id, dominant, dominated, tol) -> CheckOutcome:
    slack = float(dominant - dominated)
    scale = max(abs(float(dominant)), abs(float(dominated)))
    status = HOLDS if slack >= -tol.margin(scale) else VIOLATED
    return CheckOutcome(check_id, status, slack, scale)


@_checker("scalar_bellman")
def check_scalar_bellman(inst: dict, params, tol) -> CheckOutcome:
    """(a^p - sum a_j^p)^{1/p} + (b^p - sum b_j^p)^{1/p}
    <= ((a+b)^p - sum (a_j+b_j)^p)^{1/p}, integer p >= 1."""
    p = inst["p"]
    _require(p >= 1.0, "exponent_below_one")
    with mpmath.workdps(SCALAR_DPS):
        a, b = mpmath.mpf(inst["a"]), mpmath.mpf(inst["b"])
        aj = [mpmath.mpf(v) for v in inst["a_j"]]
        bj = [mpmath.mpf(v) for v in inst["b_j"]]
        ra = a**p - mpmath.fsum(v**p for v in aj)
        rb = b**p - mpmath.fsum(v**p for v in bj)
        _require(ra >= 0 and rb >= 0, "column_hypothesis_failed")
        rc = (a + b) ** p - mpmath.fsum((x + y) ** p for x, y in zip(aj, bj))
        _require(rc >= 0, "joint_base_negative")
        dominated = ra ** (1 / mpmath.mpf(p)) + rb ** (1 / mpmath.mpf(p))
        dominant = rc ** (1 / mpmath.mpf(p))
        return _scalar_outcome("scalar_bellman", dominant, dominated, tol)


@_checker("scalar_aczel")
def check_scalar_aczel(inst: dict, params, tol) -> CheckOutcome:
    """(a_1^2 - sum a_j^2)(b_1^2 - sum b_j^2) <= (a_1 b_1 - sum a_j b_j)^2."""
    with mpmath.workdps(SCALAR_DPS):
        a, b = mpmath.mpf(inst["a"]), mpmath.mpf(inst["b"])
        aj = [mpmath.mpf(v) for v in inst["a_j"]]
        bj = [mpmath.mpf(v) for v in inst["b_j"]]
        ra = a**2 - mpmath.fsum(v**2 for v in aj)
        rb = b**2 - mpmath.fsum(v**2 for v in bj)
        _require(ra > 0 or rb > 0, "hypothesis_failed")
        dominated = ra * rb
        dominant = (a * b - mpmath.fsum(x * y for x, y in zip(aj, bj))) ** 2
        return _scalar_outcome("scalar_aczel", dominant, dominated, tol)


@_checker("scalar_popoviciu")
def check_scalar_popoviciu(inst: dict, params, tol) -> CheckOutcome:
    """(a_1^p - sum a_j^p)(b_1^p - sum b_j^p) <= (a_1 b_1 - sum a_j b_j)^p, p >= 1."""
    p = inst["p"]
    _require(p >= 1.0, "exponent_below_one")
    with mpmath.workdps(SCALAR_DPS):
        a, b = mpmath.mpf(inst["a"]), mpmath.mpf(inst["b"])
        aj = [mpmath.mpf(v) for v in inst["a_j"]]
        bj = [mpmath.mpf(v) for v in inst["b_j"]]
        ra = a**p - mpmath.fsum(v**p for v in aj)
        rb = b**p - mpmath.fsum(v**p for v in bj)
        _require(ra > 0 or rb > 0, "hypothesis_failed")
        cross = a * b - mpmath.fsum(x * y for x, y in zip(aj, bj))
        _require(cross >= 0, "cross_term_negative")
        return _scalar_outcome("scalar_popoviciu", cross**p, ra * rb, tol)


@_checker("scalar_bellman_weighted")
def check_scalar_bellman_weighted(inst: dict, params, tol) -> CheckOutcome:
    """sum_j w_j (1 - sum_i a_ij^{1/p})^p <= (1 - sum_i (sum_j w_j a_ij)^{1/p})^p."""
    p = inst["p"]
    with mpmath.workdps(SCALAR_DPS):
        q = 1 / mpmath.mpf(p)
        a = [[mpmath.mpf(v) for v in row] for row in np.asarray(inst["a"])]
        w = [mpmath.mpf(v) for v in inst["weights"]]
        rows, cols = len(a), len(a[0])
        col_caps = [mpmath.fsum(a[i][j] ** q for i in range(rows)) for j in range(cols)]
        _require(all(c <= 1 for c in col_caps), "column_hypothesis_failed")
        dominated = mpmath.fsum(w[j] * (1 - col_caps[j]) ** mpmath.mpf(p) for j in range(cols))
        mixed = [mpmath.fsum(w[j] * a[i][j] for j in range(cols)) for i in range(rows)]
        dominant = (1 - mpmath.fsum(u**q for u in mixed)) ** mpmath.mpf(p)
        return _scalar_outcome("scalar_bellman_weighted", dominant, dominated, tol)


@_checker("scalar_bellman_columns")
def check_scalar_bellman_columns(inst: dict, params, tol) -> CheckOutcome:
    """sum_j (M_j^{1/p} - sum_i a_ij^{1/p})^p
    <= ((sum_j M_j)^{1/p} - sum_i (sum_j a_ij)^{1/p})^p."""
    p = inst["p"]
    with mpmath.workdps(SCALAR_DPS):
        q = 1 / mpmath.mpf(p)
        a = [[mpmath.mpf(v) for v in row] for row in np.asarray(inst["a"])]
        caps = [mpmath.mpf(v) for v in inst["caps"]]
        rows, cols = len(a), len(a[0])
        col_sums = [mpmath.fsum(a[i][j] ** q for i in range(rows)) for j in range(cols)]
        _require(
            all(col_sums[j] <= caps[j] ** q for j in range(cols)), "column_hypothesis_failed"
        )
        dominated = mpmath.fsum(
            (caps[j] ** q - col_sums[j]) ** mpmath.mpf(p) for j in range(cols)
        )
        row_sums = [mpmath.fsum(a[i][j] for j in range(cols)) for i in range(rows)]
        base = mpmath.fsum(caps) ** q - mpmath.fsum(u**q for u in row_sums)
        _require(base >= 0, "joint_base_negative")
        dominant = base ** mpmath.mpf(p)
        return _scalar_outcome("scalar_bellman_columns", dominant, dominated, tol)


@_checker("scalar_bellman_reverse")
def check_scalar_bellman_reverse(inst: dict, params, tol) -> CheckOutcome:
    """(1-p) p^{p/(1-p)} + sum_j w_j (1 - sum_i a_ij^{1/p})^p
    >= (1 - sum_i sum_j w_j a_ij^{1/p})^p."""
    p = inst["p"]
    with mpmath.workdps(SCALAR_DPS):
        q = 1 / mpmath.mpf(p)
        pp = mpmath.mpf(p)
        a = [[mpmath.mpf(v) for v in row] for row in np.asarray(inst["a"])]
        w = [mpmath.mpf(v) for v in inst["weights"]]
        rows, cols = len(a), len(a[0])
        col_caps = [mpmath.fsum(a[i][j] ** q for i in range(rows)) for j in range(cols)]
        _require(all(c <= 1 for c in col_caps), "column_hypothesis_failed")
        const = (1 - pp) * pp ** (pp / (1 - pp))
        dominant = const + mpmath.fsum(
            w[j] * (1 - col_caps[j]) ** pp for j in range(cols)
        )
        dominated = (1 - mpmath.fsum(w[j] * col_caps[j] for j in range(cols))) ** pp
        return _scalar_outcome("scalar_bellman_reverse", dominant, dominated, tol)


# -- registry ----------------------------------------------------------------


@dataclass(frozen=True)
class RegistryEntry:
    check_id: str
    group: str  # forward | reverse | chain | scalar
    direction: str
    statement: str
    hypothesis: str
    interval_kind: str  # sandwich | unit | positive | none
    runner: object


def _entry(runner, group, direction, statement, hypothesis, interval_kind):
    return RegistryEntry(
        check_id=runner.check_id,
        group=group,
        direction=direction,
        statement=statement,
        hypothesis=hypothesis,
        interval_kind=interval_kind,
        runner=runner,
    )


REGISTRY: dict[str, RegistryEntry] = {
    e.check_id: e
    for e in [
        _entry(
            check_bellman_map,
            "forward",
            "lhs>=rhs",
            "(Phi(I - sum w_j A_j))^p >= Phi(sum w_j (I - A_j)^p)",
            "0 <= A_j <= I, unital positive Phi, weights sum to 1, 0 < p < 1",
            "unit",
        ),
        _entry(
            check_bellman_mean,
            "forward",
            "rhs>=lhs",
            "(I - sum A_j) s_{f^p} (I - sum B_j) <= (I - sum A_j s_f B_j)^p",
            "A_j, B_j >= 0 with sum A_j <= I and sum B_j <= I, mean s_f, 0 < p < 1",
            "none",
        ),
        _entry(
            check_jensen_map,
            "forward",
            "rhs>=lhs",
            "Phi(f(A)) <= f(Phi(A))",
            "operator concave f, spectrum of A in [m, M], unital positive Phi",
            "positive",
        ),
        _entry(
            check_mean_superadditive,
            "forward",
            "rhs>=lhs",
            "sum (X_j s_f Y_j) <= (sum X_j) s_f (sum Y_j)",
            "X_j, Y_j positive definite",
            "none",
        ),
        _entry(
            check_mean_remainder,
            "forward",
            "rhs>=lhs",
            "(A - sum A_j) s_f (B - sum B_j) <= A s_f B - sum (A_j s_f B_j)",
            "sum A_j <= A, sum B_j <= B, all positive",
            "none",
        ),
        _entry(
            check_mean_power_compose,
            "forward",
            "rhs>=lhs",
            "A s_{f^p} B <= (A s_f B)^p",
            "A a positive definite contraction, B >= 0, 0 < p < 1",
            "none",
        ),
        _entry(
            check_jensen_ratio_reverse,
            "reverse",
            "lhs>=rhs",
            "gamma_f Phi(f(A)) >= f(Phi(A))",
            "concave f with positive chord on [m, M], spectrum of A in [m, M]",
            "positive",
        ),
        _entry(
            check_mean_map_ratio_reverse,
            "reverse",
            "lhs>=rhs",
            "gamma_f Psi(A s_f B) >= Psi(A) s_f Psi(B)",
            "0 < m A <= B <= M A, unital positive Psi",
            "sandwich",
        ),
        _entry(
            check_mean_sum_ratio_reverse,
            "reverse",
            "lhs>=rhs",
            "gamma_f sum (A_j s_f B_j) >= (sum A_j) s_f (sum B_j)",
            "0 < m A_j <= B_j <= M A_j",
            "sandwich",
        ),
        _entry(
            check_bellman_ratio_reverse,
            "reverse",
            "lhs>=rhs",
            "gamma^p ((I - sum A_j) s_f (I - sum B_j))^p >= (I - gamma sum A_j s_f B_j)^p",
            "pairwise and gamma-complement sandwiches with m < 1 < M, 0 <= p <= 1",
            "sandwich",
        ),
        _entry(
            check_compression_ratio_reverse,
            "reverse",
            "lhs>=rhs",
            "gamma_f [C* f(X) C + f(m)(I - C*C)] >= f(C* X C)",
            "C*C <= I, m I <= X <= M I, f concave operator monotone",
            "positive",
        ),
        _entry(
            check_mean_power_ratio_reverse,
            "reverse",
            "lhs>=rhs",
            "gamma_h [f(m)^p (I - A) + A s_{f^p} B] >= (A s_f B)^p",
            "0 < m A <= B <= M A with A a contraction; gamma_h for t^p on [f(m), f(M)]",
            "sandwich",
        ),
        _entry(
            check_bellman_arith_reverse,
            "reverse",
            "lhs>=rhs",
            "delta [f(m)^p sum A_j + (I - sum A_j) s_{f^p} (I - sum B_j)] >= (I - sum A_j nabla_lam B_j)^p",
            "affine f = (1 - lam) + lam t; pairwise and complement sandwiches, m < 1 < M",
            "sandwich",
        ),
        _entry(
            check_jensen_diff_reverse,
            "reverse",
            "lhs>=rhs",
            "beta_f I + Phi(f(A)) >= f(Phi(A))",
            "concave differentiable f, spectrum of A in [m, M]",
            "positive",
        ),
        _entry(
            check_mean_map_diff_reverse,
            "reverse",
            "lhs>=rhs",
            "beta_f Psi(X) + Psi(X s_f Y) >= Psi(X) s_f Psi(Y)",
            "0 < m X <= Y <= M X, unital positive Psi",
            "sandwich",
        ),
        _entry(
            check_mean_sum_diff_reverse,
            "reverse",
            "lhs>=rhs",
            "beta_f sum X_j + sum (X_j s_f Y_j) >= (sum X_j) s_f (sum Y_j)",
            "0 < m X_j <= Y_j <= M X_j",
            "sandwich",
        ),
        _entry(
            check_bellman_diff_reverse,
            "reverse",
            "lhs>=rhs",
            "(beta_f + (I - sum A_j) s_f (I - sum B_j))^p >= (I - sum A_j s_f B_j)^p",
            "pairwise and complement sandwiches with m < 1 < M, 0 <= p <= 1",
            "sandwich",
        ),
        _entry(
            check_aczel_reverse,
            "reverse",
            "lhs>=rhs",
            "(zeta + (I - sum A_j) #_lam (I - sum B_j))^p >= (I - sum A_j #_lam B_j)^p",
            "pairwise and complement sandwiches with m < 1 < M; zeta for t^p on [m, M]",
            "sandwich",
        ),
        _entry(
            check_jensen_family_diff_reverse,
            "reverse",
            "lhs>=rhs",
            "beta_f I + sum w_j Phi_j(f(A_j)) >= f(sum w_j Phi_j(A_j))",
            "spectra of A_j in [m, M], unital positive Phi_j, weights sum to 1",
            "positive",
        ),
        _entry(
            check_bellman_family_reverse,
            "reverse",
            "lhs>=rhs",
            "delta I + sum w_j Phi_j((I - A_j)^p) >= (sum w_j Phi_j(I - A_j))^p",
            "0 <= m I <= A_j <= M I < I, weights sum to 1, 0 < p < 1",
            "unit",
        ),
        _entry(
            check_log_family_reverse,
            "reverse",
            "lhs>=rhs",
            "log-mean constant + Phi(sum w_j log A_j) >= log(sum w_j Phi(A_j))",
            "0 < m I <= A_j <= M I, unital positive Phi, weights sum to 1",
            "positive",
        ),
        _entry(
            check_bellman_chain_split,
            "chain",
            "chain",
            "(I-sum A) s_{f^p} (I-sum B) <= (head-mean - tail-sum)^p <= (I - sum A_j s_f B_j)^p",
            "subidentity families, split index 1 <= k <= n-1",
            "none",
        ),
        _entry(
            check_bellman_chain_interp,
            "chain",
            "chain",
            "((I-sum A) s_f (I-sum B))^p <= (interp-mean - weighted-sum)^p <= (I - sum A_j s_f B_j)^p",
            "subidentity families, t_j in [0, 1]",
            "none",
        ),
        _entry(
            check_scalar_bellman,
            "scalar",
            "rhs>=lhs",
            "(a^p - sum a_j^p)^{1/p} + (b^p - sum b_j^p)^{1/p} <= ((a+b)^p - sum (a_j+b_j)^p)^{1/p}",
            "positive reals, integer p >= 1, column sums below caps",
            "none",
        ),
        _entry(
            check_scalar_aczel,
            "scalar",
            "rhs>=lhs",
            "(a_1^2 - sum a_j^2)(b_1^2 - sum b_j^2) <= (a_1 b_1 - sum a_j b_j)^2",
            "a_1^2 > sum a_j^2 or b_1^2 > sum b_j^2",
            "none",
        ),
        _entry(
            check_scalar_popoviciu,
            "scalar",
            "rhs>=lhs",
            "(a_1^p - sum a_j^p)(b_1^p - sum b_j^p) <= (a_1 b_1 - sum a_j b_j)^p",
            "p >= 1 and a head power dominates its column",
            "none",
        ),
        _entry(
            check_scalar_bellman_weighted,
            "scalar",
            "rhs>=lhs",
            "sum_j w_j (1 - sum_i a_ij^{1/p})^p <= (1 - sum_i (sum_j w_j a_ij)^{1/p})^p",
            "sum_i a_ij^{1/p} <= 1 per column, weights sum to 1, 0 < p < 1",
            "none",
        ),
        _entry(
            check_scalar_bellman_columns,
            "scalar",
            "rhs>=lhs",
            "sum_j (M_j^{1/p} - sum_i a_ij^{1/p})^p <= ((sum M_j)^{1/p} - sum_i (sum_j a_ij)^{1/p})^p",
            "sum_i a_ij^{1/p} <= M_j^{1/p} per column, 0 < p < 1",
            "none",
        ),
        _entry(
            check_scalar_bellman_reverse,
            "scalar",
            "lhs>=rhs",
            "(1-p) p^{p/(1-p)} + sum_j w_j (1 - sum_i a_ij^{1/p})^p >= (1 - sum_ij w_j a_ij^{1/p})^p",
            "sum_i a_ij^{1/p} <= 1 per column, weights sum to 1, 0 < p < 1",
            "none",
        ),
    ]
}

FORWARD_IDS = [e.check_id for e in REGISTRY.values() if e.group == "forward"]
REVERSE_IDS = [e.check_id for e in REGISTRY.values() if e.group == "reverse"]
CHAIN_IDS = [e.check_id for e in REGISTRY.values() if e.group == "chain"]
SCALAR_IDS = [e.check_id for e in REGISTRY.values() if e.group == "scalar"]
OPERATOR_IDS = FORWARD_IDS + REVERSE_IDS + CHAIN_IDS


def check(check_id: str, inst, params, tol: Tolerance = DEFAULT_TOL) -> CheckOutcome:
    """Dispatch one inequality check by registry id."""
    try:
        entry = REGISTRY[check_id]
    except KeyError:
        raise ParameterError(f"unknown inequality id {check_id!r}") from None
    return entry.runner(inst, params, tol)


def registry_listing() -> list[dict]:
    """Exportable registry metadata (id, direction, statement, hypothesis)."""
    return [
        {
            "id": e.check_id,
            "group": e.group,
            "direction": e.direction,
            "statement": e.statement,
            "hypothesis": e.hypothesis,
        }
        for e in REGISTRY.values()
    ]
