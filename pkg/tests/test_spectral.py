import numpy as np
import pytest

from opbellman.errors import ConditioningError, DomainError, ShapeError
from opbellman.instances import haar_unitary, random_pd, random_spectrum_matrix
from opbellman.spectral import (
    OrderVerdict,
    Tolerance,
    apply_function,
    as_hermitian,
    eig,
    hermitize,
    identity,
    inv_sqrt_psd,
    is_contraction,
    loewner_leq,
    matrix_from_json,
    matrix_to_json,
    power_psd,
    sqrt_psd,
)


def test_as_hermitian_symmetrizes_exactly():
    rng = np.random.default_rng(0)
    x = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    h = as_hermitian(x)
    assert np.array_equal(h, h.conj().T)


def test_as_hermitian_rejects_nonsquare():
    with pytest.raises(ShapeError):
        as_hermitian(np.zeros((2, 3)))


def test_eig_diagonal_sorted():
    d = eig(np.diag([3.0, 1.0]).astype(complex))
    assert np.allclose(d.eigenvalues, [1.0, 3.0])
    # eigenvectors form a permutation for a diagonal input
    assert np.allclose(np.abs(d.vectors), [[0, 1], [1, 0]])


def test_eig_identity():
    d = eig(identity(4))
    assert np.allclose(d.eigenvalues, 1.0)


def test_eig_reconstruction_random():
    rng = np.random.default_rng(1)
    for _ in range(20):
        h = as_hermitian(rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5)))
        lam, u = eig(h)
        recon = (u * lam) @ u.conj().T
        assert np.linalg.norm(recon - h) <= 1e-10 * (1 + np.linalg.norm(h, 2))
        assert np.linalg.norm(u.conj().T @ u - identity(5)) <= 1e-12


def test_apply_function_diagonal_sqrt():
    out = apply_function(np.diag([1.0, 4.0]).astype(complex), np.sqrt, (0.0, np.inf))
    assert np.allclose(out, np.diag([1.0, 2.0]))


def test_apply_function_identity_function():
    rng = np.random.default_rng(2)
    h = as_hermitian(rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
    assert np.allclose(apply_function(h, lambda t: t), h)


def test_apply_function_square_matches_multiplication():
    rng = np.random.default_rng(3)
    for _ in range(10):
        h = as_hermitian(rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
        assert np.allclose(apply_function(h, lambda t: t**2), h @ h, atol=1e-10)


def test_apply_function_domain_error_names_eigenvalue():
    with pytest.raises(DomainError, match="-1"):
        apply_function(np.diag([-1.0, 2.0]).astype(complex), np.sqrt, (0.0, np.inf))


def test_apply_function_clips_rounding_drift():
    h = np.diag([-1e-14, 1.0]).astype(complex)
    out = apply_function(h, np.sqrt, (0.0, np.inf))
    assert np.all(np.isfinite(out))


def test_loewner_examples():
    assert loewner_leq(np.diag([1.0, 2.0]), np.diag([2.0, 3.0])).slack == pytest.approx(1.0)
    h = random_pd(3, np.random.default_rng(4))
    v = loewner_leq(h, h)
    assert v.holds and abs(v.slack) <= 1e-14
    v = loewner_leq(np.diag([0.0, 2.0]), np.diag([1.0, 1.0]))
    assert not v.holds and v.slack == pytest.approx(-1.0)


def test_loewner_dimension_mismatch():
    with pytest.raises(ShapeError):
        loewner_leq(np.eye(2), np.eye(3))


def test_contraction_examples():
    assert is_contraction(0.5 * identity(3)).holds
    boundary = is_contraction(np.diag([1.0, 1.0]))
    assert boundary.holds and abs(boundary.slack) <= 1e-14
    v = is_contraction(np.diag([2.0, 0.0]))
    assert not v.holds and v.slack == pytest.approx(-3.0)


def test_power_diagonal():
    assert np.allclose(power_psd(np.diag([4.0, 9.0]).astype(complex), 0.5), np.diag([2.0, 3.0]))


def test_power_identities():
    rng = np.random.default_rng(5)
    h = random_pd(4, rng)
    assert np.array_equal(power_psd(h, 0.0), identity(4))
    assert np.array_equal(power_psd(h, 1.0), hermitize(h))
    s = sqrt_psd(h)
    assert np.allclose(s @ s, h, atol=1e-11)


def test_inv_sqrt_identity_oracle():
    rng = np.random.default_rng(6)
    for _ in range(10):
        h = random_pd(4, rng, 0.3, 3.0)
        r = inv_sqrt_psd(h)
        assert np.allclose(r @ h @ r, identity(4), atol=1e-10)


def test_inv_sqrt_near_singular_reports_conditioning():
    h = np.diag([1e-14, 1.0]).astype(complex)
    with pytest.raises(ConditioningError, match="lambda_min"):
        inv_sqrt_psd(h)


def test_unitary_covariance():
    rng = np.random.default_rng(7)
    fn = lambda t: t**0.3
    for _ in range(10):
        h = random_pd(4, rng, 0.2, 2.0)
        u = haar_unitary(4, rng)
        lhs = apply_function(u @ h @ u.conj().T, fn, (0.0, np.inf))
        rhs = u @ apply_function(h, fn, (0.0, np.inf)) @ u.conj().T
        assert np.linalg.norm(lhs - rhs, 2) <= 1e-10


def test_loewner_antisymmetry_at_tolerance():
    rng = np.random.default_rng(8)
    tol = Tolerance()
    for _ in range(10):
        h = random_pd(3, rng)
        g = h + 1e-13 * identity(3)
        fwd = loewner_leq(h, g, tol)
        bwd = loewner_leq(g, h, tol)
        assert fwd.holds and bwd.holds
        assert np.linalg.norm(h - g, 2) <= 3 * tol.margin(fwd.scale) * fwd.scale + 1e-12


def test_loewner_heinz_statistical():
    rng = np.random.default_rng(9)
    for _ in range(25):
        dim = int(rng.integers(1, 5))
        a = random_pd(dim, rng, 0.1, 1.5)
        b = a + random_pd(dim, rng, 0.05, 1.0)
        p = rng.uniform(0.05, 0.95)
        assert loewner_leq(power_psd(a, p), power_psd(b, p)).holds


def test_order_verdict_consistency():
    v = loewner_leq(np.diag([0.0, 2.0]), np.diag([1.0, 1.0]), Tolerance(atol=2.0, rtol=0.0))
    assert isinstance(v, OrderVerdict)
    assert v.holds  # coarse tolerance accepts slack -1
    assert v.slack == pytest.approx(-1.0)  # slack stays raw


def test_tolerance_validation():
    with pytest.raises(ValueError):
        Tolerance(atol=-1.0)
    with pytest.raises(ValueError):
        Tolerance(rtol=float("nan"))


def test_matrix_json_round_trip():
    rng = np.random.default_rng(10)
    x = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    back = matrix_from_json(matrix_to_json(x))
    assert np.array_equal(back, x)


def test_matrix_json_rejects_bad_payload():
    with pytest.raises(ShapeError):
        matrix_from_json({"dim": 2, "re": [1.0], "im": [0.0]})


def test_spectrum_matrix_ranges():
    rng = np.random.default_rng(11)
    h = random_spectrum_matrix(5, (0.25, 0.75), rng)
    lam = np.linalg.eigvalsh(h)
    assert lam.min() >= 0.25 - 1e-12 and lam.max() <= 0.75 + 1e-12
