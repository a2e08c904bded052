import numpy as np
import pytest

from opbellman.errors import ParameterError, ShapeError
from opbellman.instances import haar_unitary, random_pd, random_weights
from opbellman.means import geometric_w, log_fn
from opbellman.positive_maps import (
    BlockAverage,
    Compression,
    IdentityMap,
    Pinching,
    UnitaryMixture,
    WeightedFamily,
    block_diag,
    check_positive,
    check_unital,
    map_from_json,
)
from opbellman.spectral import apply_function, hermitize, loewner_leq

RNG = np.random.default_rng(200)


def _sample_maps(dim=4):
    v = haar_unitary(dim, RNG)[:, :2]
    return [
        IdentityMap(dim),
        Compression(v),
        UnitaryMixture(np.array([0.3, 0.7]), (haar_unitary(dim, RNG), haar_unitary(dim, RNG))),
        Pinching(((0, 1), (2, 3))),
        BlockAverage(2, 2),
        WeightedFamily(random_weights(2, RNG), (IdentityMap(2), IdentityMap(2))),
    ]


def test_identity_apply():
    x = random_pd(3, RNG)
    assert np.array_equal(IdentityMap(3).apply(x), x)


def test_compression_leading_principal_submatrix():
    v = np.eye(4, dtype=complex)[:, :2]
    x = random_pd(4, RNG)
    assert np.allclose(Compression(v).apply(x), x[:2, :2])


def test_block_average_hand_example():
    x = block_diag([np.diag([1.0, 2.0]).astype(complex), np.diag([3.0, 4.0]).astype(complex)])
    out = BlockAverage(2, 2).apply(x)
    assert np.allclose(out, np.diag([2.0, 3.0]))


@pytest.mark.parametrize("spec_idx", range(6))
def test_every_variant_is_unital(spec_idx):
    spec = _sample_maps()[spec_idx]
    assert check_unital(spec).holds


@pytest.mark.parametrize("spec_idx", range(6))
def test_every_variant_is_linear(spec_idx):
    spec = _sample_maps()[spec_idx]
    d = spec.input_dim
    x = hermitize(RNG.standard_normal((d, d)) + 1j * RNG.standard_normal((d, d)))
    y = hermitize(RNG.standard_normal((d, d)) + 1j * RNG.standard_normal((d, d)))
    alpha = 1.7
    lhs = spec.apply(alpha * x + y)
    rhs = alpha * spec.apply(x) + spec.apply(y)
    assert np.linalg.norm(lhs - rhs, 2) <= 1e-11 * (1 + np.linalg.norm(rhs, 2))


def test_compression_positive_on_samples():
    v = haar_unitary(5, RNG)[:, :3]
    assert check_positive(Compression(v), 100, np.random.default_rng(7))


def test_non_isometric_v_rejected_at_construction():
    with pytest.raises(ParameterError, match="V\\*V"):
        Compression(np.ones((3, 2), dtype=complex))


def test_unitary_mixture_validation():
    u = haar_unitary(3, RNG)
    with pytest.raises(ParameterError):
        UnitaryMixture(np.array([0.5, 0.6]), (u, u))  # weights exceed 1
    with pytest.raises(ParameterError):
        UnitaryMixture(np.array([1.0]), (np.ones((3, 3), dtype=complex),))


def test_pinching_partition_validation():
    with pytest.raises(ParameterError):
        Pinching(((0, 1), (1, 2)))  # overlapping partition


def test_weighted_family_output_dims_must_agree():
    v = haar_unitary(3, RNG)[:, :2]
    with pytest.raises(ParameterError, match="output dimension"):
        WeightedFamily(np.array([0.5, 0.5]), (IdentityMap(3), Compression(v)))


def test_weighted_family_block_action():
    w = np.array([0.25, 0.75])
    fam = WeightedFamily(w, (IdentityMap(2), IdentityMap(2)))
    a = random_pd(2, RNG)
    b = random_pd(2, RNG)
    out = fam.apply(block_diag([a, b]))
    assert np.allclose(out, 0.25 * a + 0.75 * b)


def test_shape_mismatch_raises():
    with pytest.raises(ShapeError):
        BlockAverage(2, 2).apply(np.eye(3, dtype=complex))


@pytest.mark.parametrize("f", [geometric_w(0.5), log_fn], ids=lambda f: f.label)
def test_jensen_inequality_sanity(f):
    # Phi(f(A)) <= f(Phi(A)) for operator concave f: the baseline every
    # reverse in the suite is compared against.
    rng = np.random.default_rng(300)
    for _ in range(20):
        dim = int(rng.integers(2, 5))
        specs = [
            IdentityMap(dim),
            Compression(haar_unitary(dim, rng)[:, : max(1, dim - 1)]),
            UnitaryMixture(random_weights(2, rng), (haar_unitary(dim, rng), haar_unitary(dim, rng))),
        ]
        a = random_pd(dim, rng, 0.4, 2.5)
        for spec in specs:
            lhs = spec.apply(apply_function(a, f.fn, f.domain))
            rhs = apply_function(hermitize(spec.apply(a)), f.fn, f.domain)
            assert loewner_leq(hermitize(lhs), rhs).holds


def test_map_json_round_trip():
    for spec in _sample_maps():
        back = map_from_json(spec.to_json())
        d = spec.input_dim
        x = hermitize(RNG.standard_normal((d, d)) + 1j * RNG.standard_normal((d, d)))
        assert np.allclose(spec.apply(x), back.apply(x))
