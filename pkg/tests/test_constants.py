import math

import mpmath
import numpy as np
import pytest

from opbellman.cli import _complement_power_fn
from opbellman.constants import (
    beta,
    beta_log,
    chord,
    delta_bellman,
    delta_affine_power,
    gamma,
    gamma_power,
    log_mean,
    t_star,
    zeta_aczel,
)
from opbellman.errors import (
    DegenerateIntervalError,
    HypothesisError,
    ParameterError,
    UnboundedRatioError,
)
from opbellman.means import RepresentingFunction, arithmetic_w, geometric_w, log_fn, power_fn


def test_chord_identity():
    c = chord(lambda t: t, 1.0, 2.0)
    assert c.mu == pytest.approx(1.0) and c.nu == pytest.approx(0.0, abs=1e-15)


def test_chord_sqrt_quarter_four():
    c = chord(lambda t: t**0.5, 0.25, 4.0)
    assert c.mu == pytest.approx(0.4, abs=1e-14)
    assert c.nu == pytest.approx(0.4, abs=1e-14)


def test_chord_affine():
    lam = 0.35
    c = chord(arithmetic_w(lam), 0.7, 2.9)
    assert c.mu == pytest.approx(lam, abs=1e-14)
    assert c.nu == pytest.approx(1 - lam, abs=1e-14)


def test_chord_interpolates_random_functions():
    rng = np.random.default_rng(0)
    for f in [geometric_w(0.4), log_fn, power_fn(0.8)]:
        for _ in range(10):
            m = rng.uniform(0.1, 1.0)
            M = m + rng.uniform(0.2, 3.0)
            c = chord(f, m, M)
            assert c(m) == pytest.approx(float(f(m)), rel=1e-12)
            assert c(M) == pytest.approx(float(f(M)), rel=1e-12)


def test_chord_degenerate_interval():
    with pytest.raises(DegenerateIntervalError):
        chord(lambda t: t, 1.0, 1.0 + 1e-13)


def test_gamma_affine_is_one():
    for lam, m, M in [(0.2, 0.5, 2.0), (0.5, 0.1, 0.9), (0.8, 1.5, 3.0)]:
        g = gamma(arithmetic_w(lam), m, M)
        assert g.value == pytest.approx(1.0, abs=1e-12)


def test_gamma_identity_function_is_one():
    g = gamma(geometric_w(1.0), 0.5, 2.0)
    assert g.value == pytest.approx(1.0, abs=1e-12)


def test_gamma_sqrt_quarter_four():
    g = gamma(power_fn(0.5), 0.25, 4.0)
    assert g.value == pytest.approx(1.25, abs=1e-9)
    assert g.argmax == pytest.approx(1.0, abs=1e-6)
    assert g.method == "oracle"


def test_gamma_unbounded_ratio_error():
    shifted = RepresentingFunction(
        label="shifted", fn=lambda t: t - 2.0, deriv=lambda t: 1.0, normalized=False
    )
    with pytest.raises(UnboundedRatioError):
        gamma(shifted, 1.0, 3.0)


def test_beta_affine_is_zero():
    b = beta(arithmetic_w(0.4), 0.5, 2.0)
    assert b.value == pytest.approx(0.0, abs=1e-12)


def test_beta_log_unit_e():
    b = beta(log_fn, 1.0, math.e)
    expected = math.log(math.e - 1.0) - 1.0 + 1.0 / (math.e - 1.0)
    assert b.value == pytest.approx(expected, abs=1e-9)
    assert b.value == pytest.approx(0.12330, abs=1e-5)
    assert b.argmax == pytest.approx(math.e - 1.0, abs=1e-6)
    closed = beta_log(1.0, math.e)
    assert closed.value == pytest.approx(b.value, rel=1e-9)


def test_beta_complement_power_half():
    b = beta(_complement_power_fn(0.5), 0.0, 1.0)
    assert b.value == pytest.approx(0.25, abs=1e-9)
    assert b.argmax == pytest.approx(0.75, abs=1e-6)
    assert b.value == pytest.approx(delta_bellman(0.0, 1.0, 0.5).value, rel=1e-9)


def test_beta_argmax_solves_stationarity():
    # for strictly concave differentiable f the maximizer satisfies f' = mu
    rng = np.random.default_rng(1)
    for f in [geometric_w(0.3), log_fn, power_fn(0.6)]:
        m = rng.uniform(0.2, 0.8)
        M = m + rng.uniform(0.5, 2.0)
        b = beta(f, m, M)
        c = chord(f, m, M)
        assert float(f.deriv(b.argmax)) == pytest.approx(c.mu, rel=1e-5)


def test_gamma_power_against_oracle():
    gh = gamma_power(1.0, 4.0, 0.5)
    oracle = gamma(power_fn(0.5), 1.0, 4.0)
    assert gh.value == pytest.approx(oracle.value, rel=1e-9)
    assert gh.value >= 1.0


def test_gamma_power_sweep_at_least_one():
    rng = np.random.default_rng(2)
    for _ in range(25):
        a = rng.uniform(0.05, 2.0)
        b = a + rng.uniform(0.1, 5.0)
        p = rng.uniform(0.05, 0.95)
        r = gamma_power(a, b, p)
        assert r.value >= 1.0 - 1e-12
        assert a <= r.argmax <= b


def test_gamma_power_parameter_errors():
    with pytest.raises(ParameterError):
        gamma_power(2.0, 1.0, 0.5)
    with pytest.raises(DegenerateIntervalError):
        gamma_power(1.0, 1.0 + 1e-13, 0.5)
    with pytest.raises(ParameterError):
        gamma_power(1.0, 2.0, 1e-6)  # exponent clamp


def test_delta_bellman_closed_form_limit():
    for p in np.arange(0.1, 0.95, 0.1):
        d = delta_bellman(0.0, 1.0, float(p))
        assert d.value == pytest.approx((1 - p) * p ** (p / (1 - p)), abs=1e-12)


def test_delta_bellman_oracle_agreement():
    rng = np.random.default_rng(3)
    for _ in range(10):
        m = rng.uniform(0.0, 0.4)
        M = m + rng.uniform(0.1, 0.99 - m)
        p = rng.uniform(0.1, 0.9)
        closed = delta_bellman(m, M, p)
        oracle = beta(_complement_power_fn(p), m, M)
        assert closed.value == pytest.approx(oracle.value, rel=1e-9)
        assert closed.value >= -1e-15


def test_delta_bellman_hypothesis_error():
    with pytest.raises(HypothesisError):
        delta_bellman(0.2, 1.5, 0.5)


def test_t_star_examples():
    assert t_star(0.0, 1.0, 0.5) == pytest.approx(0.75, abs=1e-12)
    rng = np.random.default_rng(4)
    for _ in range(8):
        m = rng.uniform(0.0, 0.3)
        M = m + rng.uniform(0.2, 0.6)
        p = rng.uniform(0.15, 0.85)
        oracle = beta(_complement_power_fn(p), m, M)
        ts = t_star(m, M, p)
        assert ts == pytest.approx(oracle.argmax, abs=1e-6)
        assert m < ts < M


def test_zeta_aczel_frozen_value():
    z = zeta_aczel(1.0, 2.0, 0.5)
    expected = 0.25 / (math.sqrt(2.0) - 1.0) - (2.0 - math.sqrt(2.0))
    assert z.value == pytest.approx(expected, abs=1e-12)
    assert z.value == pytest.approx(0.017767, abs=1e-6)


def test_zeta_aczel_oracle_agreement_and_limits():
    rng = np.random.default_rng(5)
    for _ in range(10):
        m = rng.uniform(0.1, 1.5)
        M = m + rng.uniform(0.2, 3.0)
        p = rng.uniform(0.1, 0.9)
        z = zeta_aczel(m, M, p)
        oracle = beta(power_fn(p), m, M)
        assert z.value == pytest.approx(oracle.value, rel=1e-9, abs=1e-12)
        assert z.value >= -1e-15
    assert zeta_aczel(1.0, 1.0 + 1e-6, 0.5).value == pytest.approx(0.0, abs=1e-7)
    with pytest.raises(ParameterError):
        zeta_aczel(-0.1, 1.0, 0.5)


def test_log_mean():
    assert log_mean(1.3, 1.3) == pytest.approx(1.3)
    assert log_mean(1.0, math.e) == pytest.approx(math.e - 1.0, rel=1e-14)
    with pytest.raises(ParameterError):
        log_mean(-1.0, 2.0)


def test_beta_log_oracle_agreement():
    rng = np.random.default_rng(6)
    for _ in range(8):
        m = rng.uniform(0.1, 2.0)
        M = m + rng.uniform(0.2, 5.0)
        closed = beta_log(m, M)
        oracle = beta(log_fn, m, M)
        assert closed.value == pytest.approx(oracle.value, rel=1e-9, abs=1e-12)
        assert closed.argmax == pytest.approx(log_mean(m, M), rel=1e-12)


def test_delta_affine_power_reduces_to_gamma_power():
    r = delta_affine_power(1.0, 0.5, 2.0, 0.5)
    direct = gamma_power(0.5, 2.0, 0.5)
    assert r.value == pytest.approx(direct.value, rel=1e-14)


def test_delta_affine_power_oracle_agreement():
    lam, m, M, p = 0.5, 0.5, 2.0, 0.5
    r = delta_affine_power(lam, m, M, p)
    f = arithmetic_w(lam)
    oracle = gamma(power_fn(p), float(f(m)), float(f(M)))
    assert r.value == pytest.approx(oracle.value, rel=1e-9)
    assert r.value >= 1.0


def test_delta_affine_power_degenerate_weight():
    with pytest.raises(DegenerateIntervalError):
        delta_affine_power(0.0, 0.5, 2.0, 0.5)


def test_oracle_uses_high_precision():
    # the golden-section bracket is 1e-12 wide: argmax of a known stationary
    # point must come back at matching precision
    g = gamma(power_fn(0.5), 0.25, 4.0)
    assert abs(g.argmax - 1.0) < 1e-6
    with mpmath.workdps(30):
        ratio = mpmath.mpf(g.argmax) ** mpmath.mpf(0.5) / (
            mpmath.mpf(0.4) * g.argmax + mpmath.mpf(0.4)
        )
        assert abs(float(ratio) - g.value) < 1e-9


def test_registered_concave_functions_have_gamma_at_least_one_and_beta_nonneg():
    rng = np.random.default_rng(7)
    fns = [arithmetic_w(0.3), geometric_w(0.5), power_fn(0.7), log_fn]
    for f in fns:
        for _ in range(5):
            m = rng.uniform(1.1, 1.5) if f.label == "log" else rng.uniform(0.2, 0.9)
            M = m + rng.uniform(0.3, 2.0)
            assert gamma(f, m, M).value >= 1.0 - 1e-12
            assert beta(f, m, M).value >= -1e-12
