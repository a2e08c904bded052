import numpy as np
import pytest

from opbellman import campaign, checks, constants
from opbellman.campaign import CampaignConfig, run_check_trial
from opbellman.checks import HOLDS, NOT_APPLICABLE, VIOLATED, check
from opbellman.errors import ParameterError
from opbellman.instances import InstanceFamily, random_pd, random_sandwich_pair, subrng
from opbellman.means import geometric_w
from opbellman.positive_maps import IdentityMap
from opbellman.scalar_refs import reference_slack
from opbellman.spectral import Tolerance, identity

TOL = Tolerance()


def _cells(check_id, **cfg_kwargs):
    cfg = CampaignConfig(**cfg_kwargs)
    return cfg, campaign.expand_cells(check_id, cfg)


def _mat(x):
    return np.atleast_2d(np.asarray(x, dtype=complex))


# -- hand-built trivial cases -------------------------------------------------


def test_bellman_map_zero_operand_gives_zero_slack():
    inst = InstanceFamily(
        hypothesis_tag="spectrum_window_family",
        A=[np.zeros((2, 2), dtype=complex)],
        weights=np.array([1.0]),
        maps=[IdentityMap(2)],
    )
    out = check("bellman_map", inst, {"p": 0.5}, TOL)
    assert out.status == HOLDS and out.slack == pytest.approx(0.0, abs=1e-14)


def test_bellman_map_scalar_concavity():
    rng = np.random.default_rng(0)
    for _ in range(20):
        a = rng.uniform(0.05, 0.95, size=3)
        inst = InstanceFamily(
            hypothesis_tag="spectrum_window_family",
            A=[_mat(v) for v in a],
            weights=np.array([0.2, 0.3, 0.5]),
            maps=[IdentityMap(1)],
        )
        out = check("bellman_map", inst, {"p": rng.uniform(0.1, 0.9)}, TOL)
        assert out.status == HOLDS and out.slack >= -1e-15


def test_bellman_family_identity_map_slack_is_delta():
    m, M, p = 0.2, 0.8, 0.5
    a = 0.55
    inst = InstanceFamily(
        hypothesis_tag="spectrum_window_family",
        A=[_mat(a)],
        weights=np.array([1.0]),
        maps=[IdentityMap(1)],
    )
    out = check("bellman_family_reverse", inst, {"m": m, "M": M, "p": p}, TOL)
    delta = constants.delta_bellman(m, M, p).value
    assert out.status == HOLDS
    assert out.slack == pytest.approx(delta, rel=1e-12)


def test_bellman_family_window_guard():
    inst = InstanceFamily(
        hypothesis_tag="spectrum_window_family",
        A=[_mat(0.5)],
        weights=np.array([1.0]),
        maps=[IdentityMap(1)],
    )
    out = check("bellman_family_reverse", inst, {"m": 0.2, "M": 1.2, "p": 0.5}, TOL)
    assert out.status == NOT_APPLICABLE
    assert out.witness["guard"] == "window_not_in_unit_interval"


def test_bellman_ratio_affine_collapses_to_equality():
    # with an affine representing function gamma = 1 and both sides coincide
    a, b, lam, p = 0.4, 0.5, 0.3, 0.6
    inst = InstanceFamily(
        hypothesis_tag="complement_sandwich_family", A=[_mat(a)], B=[_mat(b)]
    )
    out = check(
        "bellman_ratio_reverse",
        inst,
        {"f": f"arith:{lam}", "m": 0.5, "M": 2.0, "p": p},
        TOL,
    )
    assert out.status == HOLDS
    assert abs(out.slack) <= 1e-12


def test_bellman_ratio_single_pair_scalar_reduction():
    f = geometric_w(0.5)
    m, M, p = 0.5, 2.0, 0.5
    g = constants.gamma(f, m, M).value
    a = 0.3
    inst = InstanceFamily(
        hypothesis_tag="complement_sandwich_family", A=[_mat(a)], B=[_mat(a)]
    )
    out = check("bellman_ratio_reverse", inst, {"f": "geom:0.5", "m": m, "M": M, "p": p}, TOL)
    expected = g**p * (1 - a) ** p - (1 - g * a) ** p
    assert out.status == HOLDS
    assert out.slack == pytest.approx(expected, rel=1e-12)


def test_compression_identity_contraction():
    rng = np.random.default_rng(1)
    m, M = 0.5, 2.0
    f = geometric_w(0.5)
    g = constants.gamma(f, m, M).value
    x = random_pd(3, rng, 0.6, 1.9)
    inst = InstanceFamily(hypothesis_tag="contraction_window", A=[x], aux={"C": identity(3)})
    out = check("compression_ratio_reverse", inst, {"f": "geom:0.5", "m": m, "M": M}, TOL)
    fx_min = np.linalg.eigvalsh(x).min() ** 0.5
    assert out.status == HOLDS
    assert out.slack == pytest.approx((g - 1.0) * fx_min, rel=1e-9)


def test_compression_zero_contraction_power_holds():
    x = np.diag([0.7, 1.5]).astype(complex)
    inst = InstanceFamily(
        hypothesis_tag="contraction_window", A=[x], aux={"C": np.zeros((2, 2), dtype=complex)}
    )
    out = check("compression_ratio_reverse", inst, {"f": "geom:0.5", "m": 0.5, "M": 2.0}, TOL)
    assert out.status == HOLDS  # gamma f(m) I >= 0


def test_compression_log_domain_guard():
    x = np.diag([1.5, 2.5]).astype(complex)
    c = np.diag([0.0, 0.5]).astype(complex)  # singular contraction
    inst = InstanceFamily(hypothesis_tag="contraction_window", A=[x], aux={"C": c})
    out = check("compression_ratio_reverse", inst, {"f": "log", "m": 1.2, "M": 3.0}, TOL)
    assert out.status == NOT_APPLICABLE
    assert out.witness["guard"] == "compressed_spectrum_outside_domain"


def test_mean_power_ratio_identity_contraction():
    rng = np.random.default_rng(2)
    a = identity(3)
    _, b = random_sandwich_pair(a, 0.5, 2.0, rng)
    inst = InstanceFamily(hypothesis_tag="pd_contraction_sandwich", A=[a], B=[b])
    out = check("mean_power_ratio_reverse", inst, {"f": "geom:0.5", "m": 0.5, "M": 2.0, "p": 0.5}, TOL)
    assert out.status == HOLDS and out.slack >= -1e-14


def test_mean_power_compose_identity_equality():
    rng = np.random.default_rng(3)
    b = random_pd(3, rng, 0.4, 2.0)
    inst = InstanceFamily(hypothesis_tag="pd_contraction_pair", A=[identity(3)], B=[b])
    out = check("mean_power_compose", inst, {"f": "geom:0.5", "p": 0.4}, TOL)
    assert out.status == HOLDS
    assert abs(out.slack) <= 1e-12


def test_mean_power_compose_scalar_needs_contraction():
    inst = InstanceFamily(hypothesis_tag="pd_contraction_pair", A=[_mat(1.5)], B=[_mat(1.0)])
    out = check("mean_power_compose", inst, {"f": "geom:0.5", "p": 0.5}, TOL)
    assert out.status == NOT_APPLICABLE
    assert "contraction_window" in out.witness["guard"]


def test_superadditive_halves_equality():
    rng = np.random.default_rng(4)
    x, y = random_pd(3, rng), random_pd(3, rng)
    inst = InstanceFamily(hypothesis_tag="pd_family", A=[x / 2, x / 2], B=[y / 2, y / 2])
    out = check("mean_superadditive", inst, {"f": "geom:0.5"}, TOL)
    assert out.status == HOLDS
    assert abs(out.slack) <= 1e-12


def test_jensen_diff_affine_equality():
    rng = np.random.default_rng(5)
    x = random_pd(3, rng, 0.6, 1.9)
    inst = InstanceFamily(hypothesis_tag="spectrum_window", A=[x], maps=[IdentityMap(3)])
    out = check("jensen_diff_reverse", inst, {"f": "arith:0.4", "m": 0.5, "M": 2.0}, TOL)
    assert out.status == HOLDS
    assert abs(out.slack) <= 1e-12


def test_jensen_ratio_affine_equality_under_linear_map():
    rng = np.random.default_rng(6)
    from opbellman.campaign import build_map

    x = random_pd(4, rng, 0.6, 1.9)
    inst = InstanceFamily(
        hypothesis_tag="spectrum_window", A=[x], maps=[build_map("unitary-mix:2", 4, rng)]
    )
    out = check("jensen_ratio_reverse", inst, {"f": "arith:0.3", "m": 0.5, "M": 2.0}, TOL)
    assert out.status == HOLDS
    assert abs(out.slack) <= 1e-12


def test_mean_map_diff_scalar_slack_is_beta_x():
    x, y = 1.2, 1.5
    m, M = 0.5, 2.0
    f = geometric_w(0.5)
    beta = constants.beta(f, m, M).value
    inst = InstanceFamily(
        hypothesis_tag="sandwich_pair", A=[_mat(x)], B=[_mat(y)], maps=[IdentityMap(1)]
    )
    out = check("mean_map_diff_reverse", inst, {"f": "geom:0.5", "m": m, "M": M}, TOL)
    assert out.status == HOLDS
    assert out.slack == pytest.approx(beta * x, rel=1e-12)


def test_aczel_degenerate_weight_holds():
    inst = InstanceFamily(
        hypothesis_tag="complement_sandwich_family", A=[_mat(0.4)], B=[_mat(0.5)]
    )
    out = check("aczel_reverse", inst, {"lam": 0.0, "m": 0.5, "M": 2.0, "p": 0.5}, TOL)
    assert out.status == HOLDS and out.slack >= -1e-14


def test_aczel_untied_weight_admits_violation():
    # zeta is the chord gap of t^p; pairing it with a geometric weight
    # lam != p can be beaten, which is why campaigns tie lam = p.
    inst = InstanceFamily(
        hypothesis_tag="complement_sandwich_family", A=[_mat(0.5)], B=[_mat(0.25)]
    )
    out = check("aczel_reverse", inst, {"lam": 0.5, "m": 0.5, "M": 2.0, "p": 0.1}, TOL)
    assert out.status == VIOLATED
    assert out.slack < -1e-4


def test_log_family_scalar_slack_is_constant():
    a, m, M = 1.1, 0.5, 2.0
    inst = InstanceFamily(
        hypothesis_tag="spectrum_window_family",
        A=[_mat(a)],
        weights=np.array([1.0]),
        maps=[IdentityMap(1)],
    )
    out = check("log_family_reverse", inst, {"m": m, "M": M}, TOL)
    assert out.status == HOLDS
    assert out.slack == pytest.approx(constants.beta_log(m, M).value, rel=1e-12)


def test_log_family_near_degenerate_window():
    rng = np.random.default_rng(7)
    m, M = 0.8, 0.8 + 1e-4
    from opbellman.instances import random_spectrum_matrix

    a = random_spectrum_matrix(3, (m + 1e-6, M - 1e-6), rng)
    inst = InstanceFamily(
        hypothesis_tag="spectrum_window_family",
        A=[a],
        weights=np.array([1.0]),
        maps=[IdentityMap(3)],
    )
    out = check("log_family_reverse", inst, {"m": m, "M": M}, TOL)
    assert out.status == HOLDS
    assert 0.0 <= out.slack <= 1e-4


def test_chain_split_equal_families():
    rng = np.random.default_rng(8)
    from opbellman.instances import random_subidentity_family

    a = random_subidentity_family(2, 3, rng, 0.6)
    inst = InstanceFamily(hypothesis_tag="subidentity_pair_family", A=a, B=[x.copy() for x in a])
    out = check("bellman_chain_split", inst, {"f": "geom:0.5", "p": 0.5, "k": 1}, TOL)
    assert out.status == HOLDS
    assert all(s >= -1e-13 for s in out.chain_slacks)


def test_chain_split_index_guard():
    rng = np.random.default_rng(9)
    from opbellman.instances import random_subidentity_family

    a = random_subidentity_family(2, 2, rng, 0.6)
    b = random_subidentity_family(2, 2, rng, 0.6)
    inst = InstanceFamily(hypothesis_tag="subidentity_pair_family", A=a, B=b)
    out = check("bellman_chain_split", inst, {"f": "geom:0.5", "p": 0.5, "k": 2}, TOL)
    assert out.status == NOT_APPLICABLE
    assert out.witness["guard"] == "split_index_out_of_range"


def test_chain_interp_collapses():
    rng = np.random.default_rng(10)
    from opbellman.instances import random_subidentity_family

    a = random_subidentity_family(3, 3, rng, 0.6)
    b = random_subidentity_family(3, 3, rng, 0.6)
    inst = InstanceFamily(hypothesis_tag="subidentity_pair_family", A=a, B=b)
    ones = check("bellman_chain_interp", inst, {"f": "geom:0.5", "p": 0.5, "t": [1.0, 1.0, 1.0]}, TOL)
    assert ones.status == HOLDS
    assert abs(ones.chain_slacks[0]) <= 1e-12  # middle collapses onto the first term
    zeros = check("bellman_chain_interp", inst, {"f": "geom:0.5", "p": 0.5, "t": [0.0, 0.0, 0.0]}, TOL)
    assert zeros.status == HOLDS
    assert abs(zeros.chain_slacks[1]) <= 1e-12  # middle collapses onto the last term


def test_chain_coherence_scalar_total_is_link_sum():
    rng = np.random.default_rng(11)
    from opbellman.instances import random_subidentity_family

    a = random_subidentity_family(2, 1, rng, 0.6)
    b = random_subidentity_family(2, 1, rng, 0.6)
    inst = InstanceFamily(hypothesis_tag="subidentity_pair_family", A=a, B=b)
    out = check("bellman_chain_split", inst, {"f": "geom:0.5", "p": 0.5, "k": 1}, TOL)
    ref = reference_slack("bellman_chain_split", inst, {"f": "geom:0.5", "p": 0.5, "k": 1})
    total = sum(ref["chain"])
    assert out.chain_slacks[0] + out.chain_slacks[1] == pytest.approx(total, abs=1e-12)


def test_dispatcher_unknown_id():
    with pytest.raises(ParameterError, match="unknown inequality id"):
        check("not_a_check", None, {}, TOL)


def test_registry_listing_complete():
    listing = checks.registry_listing()
    assert {row["id"] for row in listing} == set(checks.REGISTRY)
    assert len(checks.REVERSE_IDS) == 15
    assert len(checks.FORWARD_IDS) == 6
    assert len(checks.CHAIN_IDS) == 2
    assert len(checks.SCALAR_IDS) == 6
    for row in listing:
        assert row["statement"] and row["hypothesis"]


def test_scalar_checks_hold_on_generated_instances():
    cfg = CampaignConfig(n_values=(1, 2, 4), trials=1)
    for cid in checks.SCALAR_IDS:
        for ci, cell in enumerate(campaign.expand_cells(cid, cfg)):
            for trial in range(3):
                out, *_ = run_check_trial(cid, cell, cfg, trial)
                assert out.status == HOLDS, (cid, cell, out)


def test_scalar_bellman_single_column():
    inst = {"p": 2.0, "a": 1.0, "a_j": np.array([0.6]), "b": 1.0, "b_j": np.array([0.6])}
    out = check("scalar_bellman", inst, {}, TOL)
    # equal proportional columns make the classical bound tight
    assert out.status == HOLDS
    assert abs(out.slack) <= 1e-14


def test_scalar_popoviciu_large_exponent_counterexample():
    # the same-exponent product form is provable only for p <= 2; this
    # p > 2 instance satisfies the stated hypotheses yet fails
    inst = {
        "p": 2.1218242917117216,
        "a": 1.5996604951402518,
        "a_j": np.array([0.7520282, 0.63385116]),
        "b": 1.200868356402317,
        "b_j": np.array([0.60137707, 0.68335775]),
    }
    out = check("scalar_popoviciu", inst, {}, TOL)
    assert out.status == VIOLATED


def test_scalar_reverse_constant_matches_unit_window_position():
    # the additive constant of the scalar reverse equals the [0, 1] limit of
    # the operator constant
    for p in (0.2, 0.5, 0.8):
        assert constants.delta_bellman(0.0, 1.0, p).value == pytest.approx(
            (1 - p) * p ** (p / (1 - p)), abs=1e-13
        )


# -- campaign-driven coverage --------------------------------------------------


@pytest.mark.parametrize("check_id", checks.OPERATOR_IDS)
def test_operator_checks_hold_on_generated_instances(check_id):
    cfg = CampaignConfig(dims=(1, 2, 4), n_values=(1, 2), trials=1)
    cells = campaign.expand_cells(check_id, cfg)
    for ci, cell in enumerate(cells[:: max(1, len(cells) // 8)]):
        out, *_ = run_check_trial(check_id, cell, cfg, 0)
        assert out.status in (HOLDS, NOT_APPLICABLE), (check_id, cell, out)
        if out.status == HOLDS:
            assert out.slack >= -TOL.margin(out.scale)


@pytest.mark.parametrize("check_id", checks.OPERATOR_IDS)
def test_dim1_consistency_with_scalar_reference(check_id):
    cfg = CampaignConfig(dims=(1,), n_values=(1, 3), trials=1)
    cells = campaign.expand_cells(check_id, cfg)
    compared = 0
    for ci, cell in enumerate(cells):
        out, inst, params, _ = run_check_trial(check_id, cell, cfg, ci)
        if out.status == NOT_APPLICABLE:
            continue
        ref = reference_slack(check_id, inst, params)
        assert out.slack == pytest.approx(ref["slack"], abs=1e-12), (check_id, cell)
        if out.chain_slacks is not None:
            for got, want in zip(out.chain_slacks, ref["chain"]):
                assert got == pytest.approx(want, abs=1e-12)
        compared += 1
    assert compared > 0


def test_outcome_replay_is_deterministic():
    cfg = CampaignConfig(dims=(3,), n_values=(2,), trials=1)
    cell = campaign.expand_cells("bellman_diff_reverse", cfg)[0]
    out1, inst1, params1, _ = run_check_trial("bellman_diff_reverse", cell, cfg, 0)
    out2 = check("bellman_diff_reverse", inst1, params1, TOL)
    assert out1.slack == out2.slack
    assert out1.status == out2.status


def test_affine_scaling_consistency_on_shared_instance():
    # with an affine weight the ratio constant is 1, so the reverse and the
    # forward mean-Bellman checks must agree on one and the same family
    from opbellman.instances import GenConfig, complement_sandwich_family
    from opbellman.means import arithmetic_w

    rng = subrng(5150, "shared", 0)
    cfg = GenConfig(dim=3, n=2, interval=(0.5, 2.0), seed=0)
    fam = complement_sandwich_family(cfg, arithmetic_w(0.4), 1.0, rng)
    assert fam is not None
    reverse = check(
        "bellman_ratio_reverse", fam, {"f": "arith:0.4", "m": 0.5, "M": 2.0, "p": 0.5}, TOL
    )
    forward = check("bellman_mean", fam, {"f": "arith:0.4", "p": 0.5}, TOL)
    assert reverse.status == HOLDS and abs(reverse.slack) <= 1e-12
    assert forward.status == HOLDS and forward.slack >= -1e-13
