"""Campaign execution: cell expansion, instance builders, reports, witnesses.

A campaign crosses every requested check with the parameter grids that
matter to it (dimension, family size, interval, exponent, weight, mean,
map) and runs ``trials`` seeded instances per cell.  Trial (check, cell,
trial) draws from its own counter-derived substream, so runs are
reproducible and order-independent; two runs with one seed produce
byte-identical JSON reports.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, fields
from statistics import median

import numpy as np

from . import __version__, checks
from .checks import (
    NOT_APPLICABLE,
    REGISTRY,
    SCALAR_IDS,
    VIOLATED,
    CheckOutcome,
    _gamma_cached,
)
from .errors import ParameterError, WitnessFormatError
from .instances import (
    GenConfig,
    InstanceFamily,
    complement_sandwich_family,
    random_contraction,
    random_pd,
    random_sandwich_pair,
    random_spectrum_matrix,
    random_subidentity_family,
    random_weights,
    scalar_instance,
    subrng,
    haar_unitary,
)
from .means import function_from_id
from .positive_maps import (
    Compression,
    IdentityMap,
    Pinching,
    UnitaryMixture,
    map_from_json,
)
from .spectral import Tolerance, matrix_from_json, matrix_to_json

DEFAULT_SEED = 1729

#: Edge shrink applied when drawing spectra inside a hypothesis window.
_WINDOW_SHRINK = 0.02

_FALLBACK_INTERVAL = {
    "sandwich": (0.5, 2.0),
    "unit": (0.2, 0.8),
    "positive": (0.5, 2.0),
}


@dataclass(frozen=True)
class CampaignConfig:
    trials: int = 2
    dims: tuple[int, ...] = (1, 2, 3, 4, 5, 6)
    n_values: tuple[int, ...] = (1, 3)
    intervals: tuple[tuple[float, float], ...] = ((0.5, 2.0), (0.2, 0.8))
    p_grid: tuple[float, ...] = (0.5,)
    lambda_grid: tuple[float, ...] = (0.5,)
    means: tuple[str, ...] = ("arith:0.5", "geom:0.5")
    maps: tuple[str, ...] = ("id", "compress:2", "unitary-mix:2")
    checks: tuple[str, ...] = tuple(REGISTRY)
    seed: int = DEFAULT_SEED
    tolerance: Tolerance = Tolerance()
    out_path: str | None = None
    format: str = "json"

    def validate(self) -> None:
        if self.trials < 1:
            raise ParameterError("trials: must be >= 1")
        for name in ("dims", "n_values", "intervals", "p_grid", "lambda_grid", "means", "maps"):
            if not getattr(self, name):
                raise ParameterError(f"{name}: grid must be nonempty")
        for i, d in enumerate(self.dims):
            if d < 1:
                raise ParameterError(f"dims[{i}]={d}: must be >= 1")
        for i, n in enumerate(self.n_values):
            if n < 1:
                raise ParameterError(f"n_values[{i}]={n}: must be >= 1")
        for i, (m, M) in enumerate(self.intervals):
            if not m < M:
                raise ParameterError(f"intervals[{i}]=({m}, {M}): need m < M")
        for i, p in enumerate(self.p_grid):
            if not 0.0 < p < 1.0:
                raise ParameterError(f"p_grid[{i}]={p}: must be in (0, 1)")
        for i, lam in enumerate(self.lambda_grid):
            if not 0.0 < lam < 1.0:
                raise ParameterError(f"lambda_grid[{i}]={lam}: must be in (0, 1)")
        for i, fid in enumerate(self.means):
            function_from_id(fid)  # raises ParameterError with the culprit
        for cid in self.checks:
            if cid not in REGISTRY:
                raise ParameterError(f"checks: unknown inequality id {cid!r}")
        if self.format not in ("json", "csv", "text"):
            raise ParameterError(f"format: must be json, csv or text, got {self.format!r}")


def config_to_json(cfg: CampaignConfig, echo: bool = False) -> dict:
    """Serialize a config; ``echo=True`` omits I/O routing fields so that the
    report stays a pure function of campaign semantics and seed."""
    out = {
        "trials": cfg.trials,
        "dims": list(cfg.dims),
        "n_values": list(cfg.n_values),
        "intervals": [list(iv) for iv in cfg.intervals],
        "p_grid": list(cfg.p_grid),
        "lambda_grid": list(cfg.lambda_grid),
        "means": list(cfg.means),
        "maps": list(cfg.maps),
        "checks": list(cfg.checks),
        "seed": cfg.seed,
        "tolerance": {"atol": cfg.tolerance.atol, "rtol": cfg.tolerance.rtol},
    }
    if not echo:
        out["out_path"] = cfg.out_path
        out["format"] = cfg.format
    return out


def config_from_json(obj: dict) -> CampaignConfig:
    known = {f.name for f in fields(CampaignConfig)}
    unknown = set(obj) - known
    if unknown:
        raise ParameterError(f"unknown config keys: {sorted(unknown)}")
    kwargs = {}
    for key, value in obj.items():
        if key == "tolerance":
            kwargs[key] = Tolerance(float(value["atol"]), float(value["rtol"]))
        elif key == "intervals":
            kwargs[key] = tuple((float(a), float(b)) for a, b in value)
        elif key in ("dims", "n_values"):
            kwargs[key] = tuple(int(v) for v in value)
        elif key in ("p_grid", "lambda_grid"):
            kwargs[key] = tuple(float(v) for v in value)
        elif key in ("means", "maps", "checks"):
            kwargs[key] = tuple(str(v) for v in value)
        elif key == "out_path":
            kwargs[key] = None if value is None else str(value)
        elif key == "format":
            kwargs[key] = str(value)
        else:
            kwargs[key] = int(value)
    cfg = CampaignConfig(**kwargs)
    cfg.validate()
    return cfg


# -- maps ---------------------------------------------------------------------


def build_map(map_id: str, dim: int, rng: np.random.Generator):
    """Instantiate a positive map from its config id for operands of ``dim``."""
    if map_id == "id":
        return IdentityMap(dim)
    parts = map_id.split(":")
    kind = parts[0]
    try:
        arg = int(parts[1]) if len(parts) > 1 else 1
    except ValueError as exc:
        raise ParameterError(f"malformed map id {map_id!r}") from exc
    if kind == "compress":
        k = max(1, min(arg, dim))
        return Compression(haar_unitary(dim, rng)[:, :k])
    if kind == "unitary-mix":
        r = max(1, arg)
        return UnitaryMixture(random_weights(r, rng), tuple(haar_unitary(dim, rng) for _ in range(r)))
    if kind == "pinch":
        b = max(1, min(arg, dim))
        bounds = np.linspace(0, dim, b + 1).astype(int)
        blocks = tuple(tuple(range(bounds[i], bounds[i + 1])) for i in range(b) if bounds[i] < bounds[i + 1])
        return Pinching(blocks)
    if kind == "block-avg":
        from .positive_maps import BlockAverage

        return BlockAverage(max(1, arg), dim)
    if kind == "weighted":
        from .positive_maps import WeightedFamily

        n = max(1, arg)
        return WeightedFamily(random_weights(n, rng), tuple(IdentityMap(dim) for _ in range(n)))
    raise ParameterError(f"unknown map id {map_id!r}")


def _inner_maps(map_id: str, n: int, dim: int, rng: np.random.Generator) -> list:
    """Per-member maps with a common output dimension for family checks."""
    return [build_map(map_id, dim, rng) for _ in range(n)]


# -- instance builders --------------------------------------------------------


def _shrunk(m: float, M: float) -> tuple[float, float]:
    d = _WINDOW_SHRINK * (M - m)
    return m + d, M - d


def _window_family(cell, rng, n_key="n") -> InstanceFamily:
    lo, hi = _shrunk(cell["m"], cell["M"])
    mats = [random_spectrum_matrix(cell["dim"], (lo, hi), rng) for _ in range(cell[n_key])]
    return InstanceFamily(hypothesis_tag="spectrum_window_family", A=mats)


def _build_bellman_map(cell, rng):
    fam = _window_family(cell, rng)
    fam.weights = random_weights(cell["n"], rng)
    fam.maps = [build_map(cell["map"], cell["dim"], rng)]
    return fam, {"p": cell["p"]}


def _build_bellman_mean(cell, rng):
    cap_a = rng.uniform(0.4, 0.85)
    cap_b = rng.uniform(0.4, 0.85)
    fam = InstanceFamily(
        hypothesis_tag="subidentity_pair_family",
        A=random_subidentity_family(cell["n"], cell["dim"], rng, cap_a),
        B=random_subidentity_family(cell["n"], cell["dim"], rng, cap_b),
    )
    return fam, {"f": cell["f"], "p": cell["p"]}


def _build_window_single(cell, rng):
    lo, hi = _shrunk(cell["m"], cell["M"])
    x = random_spectrum_matrix(cell["dim"], (lo, hi), rng)
    fam = InstanceFamily(
        hypothesis_tag="spectrum_window",
        A=[x],
        maps=[build_map(cell["map"], cell["dim"], rng)],
    )
    return fam, {"f": cell["f"], "m": cell["m"], "M": cell["M"]}


def _build_pd_family(cell, rng):
    n, d = cell["n"], cell["dim"]
    fam = InstanceFamily(
        hypothesis_tag="pd_family",
        A=[random_pd(d, rng, 0.3, 1.5) for _ in range(n)],
        B=[random_pd(d, rng, 0.3, 1.5) for _ in range(n)],
    )
    return fam, {"f": cell["f"]}


def _build_dominated_family(cell, rng):
    n, d = cell["n"], cell["dim"]
    a = [random_pd(d, rng, 0.2, 1.0) for _ in range(n)]
    b = [random_pd(d, rng, 0.2, 1.0) for _ in range(n)]
    fam = InstanceFamily(
        hypothesis_tag="dominated_family",
        A=a,
        B=b,
        aux={
            "A_total": sum(a) + random_pd(d, rng, 0.2, 1.0),
            "B_total": sum(b) + random_pd(d, rng, 0.2, 1.0),
        },
    )
    return fam, {"f": cell["f"]}


def _build_pd_contraction_pair(cell, rng):
    d = cell["dim"]
    fam = InstanceFamily(
        hypothesis_tag="pd_contraction_pair",
        A=[random_spectrum_matrix(d, (0.1, 0.95), rng)],
        B=[random_pd(d, rng, 0.3, 2.0)],
    )
    return fam, {"f": cell["f"], "p": cell["p"]}


def _build_sandwich_pair(cell, rng):
    d = cell["dim"]
    x = random_pd(d, rng, 0.5, 1.5)
    x, y = random_sandwich_pair(x, cell["m"], cell["M"], rng)
    fam = InstanceFamily(
        hypothesis_tag="sandwich_pair",
        A=[x],
        B=[y],
        maps=[build_map(cell["map"], d, rng)],
    )
    return fam, {"f": cell["f"], "m": cell["m"], "M": cell["M"]}


def _build_sandwich_family(cell, rng):
    d, n = cell["dim"], cell["n"]
    pairs = [random_sandwich_pair(random_pd(d, rng, 0.5, 1.5), cell["m"], cell["M"], rng) for _ in range(n)]
    fam = InstanceFamily(
        hypothesis_tag="sandwich_family",
        A=[p[0] for p in pairs],
        B=[p[1] for p in pairs],
    )
    return fam, {"f": cell["f"], "m": cell["m"], "M": cell["M"]}


def _gen_cfg(cell) -> GenConfig:
    return GenConfig(
        dim=cell["dim"],
        n=cell["n"],
        interval=(cell["m"], cell["M"]),
        p=cell.get("p", 0.5),
        lam=cell.get("lam", 0.5),
    )


def _build_gamma_complement(cell, rng):
    f = function_from_id(cell["f"])
    g = _gamma_cached(f.label, cell["m"], cell["M"])
    fam = complement_sandwich_family(_gen_cfg(cell), f, g, rng)
    if fam is None:
        return None, None
    return fam, {"f": cell["f"], "m": cell["m"], "M": cell["M"], "p": cell["p"]}


def _build_plain_complement(cell, rng):
    f = function_from_id(cell["f"])
    fam = complement_sandwich_family(_gen_cfg(cell), f, 1.0, rng)
    if fam is None:
        return None, None
    return fam, {"f": cell["f"], "m": cell["m"], "M": cell["M"], "p": cell["p"]}


def _build_arith_complement(cell, rng):
    lam = cell["lam"]
    f = function_from_id(f"arith:{lam:g}")
    fam = complement_sandwich_family(_gen_cfg(cell), f, 1.0, rng)
    if fam is None:
        return None, None
    return fam, {"lam": lam, "m": cell["m"], "M": cell["M"], "p": cell["p"]}


def _build_aczel_complement(cell, rng):
    # The geometric weight is tied to the exponent: the additive constant in
    # the Aczel-type reverse is the chord gap of t^p, so the matching mean is
    # the p-weighted geometric one.
    p = cell["p"]
    f = function_from_id(f"geom:{p:g}")
    fam = complement_sandwich_family(_gen_cfg(cell), f, 1.0, rng)
    if fam is None:
        return None, None
    return fam, {"lam": p, "m": cell["m"], "M": cell["M"], "p": p}


def _build_contraction_window(cell, rng):
    d = cell["dim"]
    lo, hi = _shrunk(cell["m"], cell["M"])
    kind = "unitary" if rng.uniform() < 0.5 else "ginibre"
    fam = InstanceFamily(
        hypothesis_tag="contraction_window",
        A=[random_spectrum_matrix(d, (lo, hi), rng)],
        aux={"C": random_contraction(d, rng, kind)},
    )
    return fam, {"f": cell["f"], "m": cell["m"], "M": cell["M"]}


def _build_pd_contraction_sandwich(cell, rng):
    d = cell["dim"]
    a = random_spectrum_matrix(d, (0.15, 0.9), rng)
    a, b = random_sandwich_pair(a, cell["m"], cell["M"], rng)
    fam = InstanceFamily(hypothesis_tag="pd_contraction_sandwich", A=[a], B=[b])
    return fam, {"f": cell["f"], "m": cell["m"], "M": cell["M"], "p": cell["p"]}


def _build_window_weighted_family(cell, rng):
    fam = _window_family(cell, rng)
    fam.weights = random_weights(cell["n"], rng)
    fam.maps = _inner_maps(cell["map"], cell["n"], cell["dim"], rng)
    return fam, {"f": cell.get("f", "log"), "m": cell["m"], "M": cell["M"], "p": cell.get("p", 0.5)}


def _build_log_family(cell, rng):
    fam = _window_family(cell, rng)
    fam.weights = random_weights(cell["n"], rng)
    fam.maps = [build_map(cell["map"], cell["dim"], rng)]
    return fam, {"m": cell["m"], "M": cell["M"]}


def _build_chain_split(cell, rng):
    fam, params = _build_bellman_mean(cell, rng)
    params = {"f": cell["f"], "p": cell["p"], "k": cell["k"]}
    return fam, params


def _build_chain_interp(cell, rng):
    fam, _ = _build_bellman_mean(cell, rng)
    t = rng.uniform(0.0, 1.0, size=cell["n"])
    return fam, {"f": cell["f"], "p": cell["p"], "t": [float(v) for v in t]}


def _build_scalar(kind):
    def build(cell, rng):
        rows = int(rng.integers(1, 4))
        if kind == "bellman":
            p = float(rng.integers(1, 5))
        elif kind == "aczel":
            p = 2.0
        elif kind == "popoviciu":
            # The same-exponent product form follows from the Hoelder-type
            # original only for p <= 2; above 2 it admits counterexamples.
            p = float(rng.uniform(1.0, 2.0))
        else:
            p = cell["p"]
        inst = scalar_instance(kind, (rows, cell["n"]), p, rng)
        return inst, {"p": p}

    return build


BUILDERS = {
    "bellman_map": _build_bellman_map,
    "bellman_mean": _build_bellman_mean,
    "jensen_map": _build_window_single,
    "mean_superadditive": _build_pd_family,
    "mean_remainder": _build_dominated_family,
    "mean_power_compose": _build_pd_contraction_pair,
    "jensen_ratio_reverse": _build_window_single,
    "mean_map_ratio_reverse": _build_sandwich_pair,
    "mean_sum_ratio_reverse": _build_sandwich_family,
    "bellman_ratio_reverse": _build_gamma_complement,
    "compression_ratio_reverse": _build_contraction_window,
    "mean_power_ratio_reverse": _build_pd_contraction_sandwich,
    "bellman_arith_reverse": _build_arith_complement,
    "jensen_diff_reverse": _build_window_single,
    "mean_map_diff_reverse": _build_sandwich_pair,
    "mean_sum_diff_reverse": _build_sandwich_family,
    "bellman_diff_reverse": _build_plain_complement,
    "aczel_reverse": _build_aczel_complement,
    "jensen_family_diff_reverse": _build_window_weighted_family,
    "bellman_family_reverse": _build_window_weighted_family,
    "log_family_reverse": _build_log_family,
    "bellman_chain_split": _build_chain_split,
    "bellman_chain_interp": _build_chain_interp,
    "scalar_bellman": _build_scalar("bellman"),
    "scalar_aczel": _build_scalar("aczel"),
    "scalar_popoviciu": _build_scalar("popoviciu"),
    "scalar_bellman_weighted": _build_scalar("mp3"),
    "scalar_bellman_columns": _build_scalar("mp1"),
    "scalar_bellman_reverse": _build_scalar("eq3"),
}

#: Parameter axes each check actually consumes.
CHECK_AXES = {
    "bellman_map": ("dim", "n", "interval", "p", "map"),
    "bellman_mean": ("dim", "n", "p", "f"),
    "jensen_map": ("dim", "interval", "f+log", "map"),
    "mean_superadditive": ("dim", "n", "f"),
    "mean_remainder": ("dim", "n", "f"),
    "mean_power_compose": ("dim", "p", "f"),
    "jensen_ratio_reverse": ("dim", "interval", "f", "map"),
    "mean_map_ratio_reverse": ("dim", "interval", "f", "map"),
    "mean_sum_ratio_reverse": ("dim", "n", "interval", "f"),
    "bellman_ratio_reverse": ("dim", "n", "interval", "p", "f"),
    "compression_ratio_reverse": ("dim", "interval", "f"),
    "mean_power_ratio_reverse": ("dim", "interval", "p", "f"),
    "bellman_arith_reverse": ("dim", "n", "interval", "p", "lam"),
    "jensen_diff_reverse": ("dim", "interval", "f+log", "map"),
    "mean_map_diff_reverse": ("dim", "interval", "f", "map"),
    "mean_sum_diff_reverse": ("dim", "n", "interval", "f"),
    "bellman_diff_reverse": ("dim", "n", "interval", "p", "f"),
    "aczel_reverse": ("dim", "n", "interval", "p"),
    "jensen_family_diff_reverse": ("dim", "n", "interval", "f+log", "map"),
    "bellman_family_reverse": ("dim", "n", "interval", "p", "map"),
    "log_family_reverse": ("dim", "n", "interval", "map"),
    "bellman_chain_split": ("dim", "n2", "p", "f", "k"),
    "bellman_chain_interp": ("dim", "n2", "p", "f"),
    "scalar_bellman": ("n",),
    "scalar_aczel": ("n",),
    "scalar_popoviciu": ("n",),
    "scalar_bellman_weighted": ("n", "p"),
    "scalar_bellman_columns": ("n", "p"),
    "scalar_bellman_reverse": ("n", "p"),
}


def _interval_matches(kind: str, m: float, M: float) -> bool:
    if kind == "sandwich":
        return m < 1.0 < M
    if kind == "unit":
        return 0.0 <= m < M < 1.0
    if kind == "positive":
        return 0.0 < m < M
    return False


def _intervals_for(entry, cfg: CampaignConfig) -> list[tuple[float, float]]:
    if entry.interval_kind == "none":
        return [(math.nan, math.nan)]
    good = [iv for iv in cfg.intervals if _interval_matches(entry.interval_kind, *iv)]
    return good or [_FALLBACK_INTERVAL[entry.interval_kind]]


def expand_cells(check_id: str, cfg: CampaignConfig) -> list[dict]:
    """Cross the grids relevant to one check into concrete parameter cells."""
    entry = REGISTRY[check_id]
    axes = CHECK_AXES[check_id]
    cells: list[dict] = [{}]

    def cross(values, key):
        nonlocal cells
        cells = [dict(c, **{key: v}) for c in cells for v in values]

    if "dim" in axes:
        cross(cfg.dims, "dim")
    if "n" in axes:
        cross(cfg.n_values, "n")
    if "n2" in axes:
        ns = [n for n in cfg.n_values if n >= 2] or [2]
        cross(ns, "n")
    if "interval" in axes:
        ivs = _intervals_for(entry, cfg)
        cells = [dict(c, m=iv[0], M=iv[1]) for c in cells for iv in ivs]
    if "p" in axes:
        cross(cfg.p_grid, "p")
    if "lam" in axes:
        cross(cfg.lambda_grid, "lam")
    if "f" in axes:
        cross(cfg.means, "f")
    if "f+log" in axes:
        fns = list(cfg.means)
        if check_id != "jensen_ratio_reverse":
            fns.append("log")
        cross(fns, "f")
    if "map" in axes:
        cross(cfg.maps, "map")
    if "k" in axes:
        cells = [dict(c, k=k) for c in cells for k in range(1, c["n"])]
    return cells


# -- witnesses ----------------------------------------------------------------


def _family_to_json(inst: InstanceFamily) -> dict:
    return {
        "hypothesis_tag": inst.hypothesis_tag,
        "A": [matrix_to_json(a) for a in inst.A],
        "B": None if inst.B is None else [matrix_to_json(b) for b in inst.B],
        "weights": None if inst.weights is None else [float(w) for w in inst.weights],
        "maps": None if inst.maps is None else [m.to_json() for m in inst.maps],
        "aux": {k: matrix_to_json(v) for k, v in inst.aux.items()},
    }


def _family_from_json(obj: dict) -> InstanceFamily:
    return InstanceFamily(
        hypothesis_tag=obj["hypothesis_tag"],
        A=[matrix_from_json(a) for a in obj["A"]],
        B=None if obj["B"] is None else [matrix_from_json(b) for b in obj["B"]],
        weights=None if obj["weights"] is None else np.asarray(obj["weights"], dtype=float),
        maps=None if obj["maps"] is None else [map_from_json(m) for m in obj["maps"]],
        aux={k: matrix_from_json(v) for k, v in obj.get("aux", {}).items()},
    )


def _scalar_inst_to_json(inst: dict) -> dict:
    out = {}
    for key, value in inst.items():
        if isinstance(value, np.ndarray):
            out[key] = {"array": value.tolist()}
        else:
            out[key] = float(value)
    return out


def _scalar_inst_from_json(obj: dict) -> dict:
    out = {}
    for key, value in obj.items():
        if isinstance(value, dict) and "array" in value:
            out[key] = np.asarray(value["array"], dtype=float)
        else:
            out[key] = float(value)
    return out


def make_witness(check_id: str, params: dict, inst, outcome: CheckOutcome, provenance: dict) -> dict:
    """Replayable record of one check evaluation."""
    if check_id in SCALAR_IDS:
        payload = {"scalars": _scalar_inst_to_json(inst)}
    else:
        payload = {"family": _family_to_json(inst)}
    return {
        "schema": "opbellman-witness/1",
        "check": check_id,
        "params": params,
        "instance": payload,
        "outcome": {
            "status": outcome.status,
            "slack": outcome.slack,
            "scale": outcome.scale,
            "chain_slacks": None if outcome.chain_slacks is None else list(outcome.chain_slacks),
        },
        "provenance": provenance,
    }


def replay_witness(obj: dict, tol: Tolerance = Tolerance()) -> tuple[CheckOutcome, dict, bool]:
    """Re-run a recorded check; returns (fresh outcome, recorded outcome, match).

    Match means the recomputed slack agrees with the recorded one to 1e-12.
    """
    if not isinstance(obj, dict) or obj.get("schema") != "opbellman-witness/1":
        raise WitnessFormatError("not an opbellman witness document")
    for key in ("check", "params", "instance", "outcome"):
        if key not in obj:
            raise WitnessFormatError(f"witness is missing field {key!r}")
    check_id = obj["check"]
    if check_id not in REGISTRY:
        raise WitnessFormatError(f"witness names unknown check {check_id!r}")
    payload = obj["instance"]
    try:
        if check_id in SCALAR_IDS:
            inst = _scalar_inst_from_json(payload["scalars"])
        else:
            inst = _family_from_json(payload["family"])
    except (KeyError, TypeError, ValueError) as exc:
        raise WitnessFormatError(f"bad instance payload: {exc}") from exc
    outcome = checks.check(check_id, inst, obj["params"], tol)
    recorded = obj["outcome"]
    rec_slack = recorded.get("slack")
    if outcome.status == NOT_APPLICABLE or rec_slack is None:
        match = outcome.status == recorded.get("status")
    else:
        match = (
            outcome.status == recorded.get("status")
            and math.isfinite(outcome.slack)
            and abs(outcome.slack - float(rec_slack)) <= 1e-12
        )
    return outcome, recorded, match


# -- campaign execution -------------------------------------------------------


def run_check_trial(check_id: str, cell: dict, cfg: CampaignConfig, trial: int):
    """One seeded trial; returns (outcome, inst, params, provenance)."""
    cell_key = json.dumps(cell, sort_keys=True)
    rng = subrng(cfg.seed, check_id, cell_key, trial)
    inst, params = BUILDERS[check_id](cell, rng)
    provenance = {"seed": cfg.seed, "cell": cell, "trial": trial}
    if inst is None:
        outcome = CheckOutcome(
            check_id, NOT_APPLICABLE, math.nan, math.nan, witness={"guard": "generator_rejected"}
        )
        return outcome, None, None, provenance
    outcome = checks.check(check_id, inst, params, cfg.tolerance)
    return outcome, inst, params, provenance


def run_campaign(cfg: CampaignConfig) -> dict:
    """Execute the full campaign and return the report document."""
    cfg.validate()
    cells_out = []
    total = {"trials": 0, "holds": 0, "violations": 0, "not_applicable": 0}
    warnings = []
    na_by_check: dict[str, int] = {}
    trials_by_check: dict[str, int] = {}

    for check_id in cfg.checks:
        for cell in expand_cells(check_id, cfg):
            holds = violated = na = 0
            slacks = []
            normalized = []
            na_guards: dict[str, int] = {}
            argmin_ref = None
            min_slack = math.inf
            witnesses = []
            for trial in range(cfg.trials):
                outcome, inst, params, provenance = run_check_trial(check_id, cell, cfg, trial)
                if outcome.status == NOT_APPLICABLE:
                    na += 1
                    guard = (outcome.witness or {}).get("guard", "unspecified")
                    na_guards[guard] = na_guards.get(guard, 0) + 1
                    continue
                slacks.append(outcome.slack)
                if outcome.scale > 0:
                    normalized.append(outcome.slack / outcome.scale)
                if outcome.slack < min_slack:
                    min_slack = outcome.slack
                    argmin_ref = {"trial": trial}
                if outcome.status == VIOLATED:
                    violated += 1
                    witnesses.append(make_witness(check_id, params, inst, outcome, provenance))
                else:
                    holds += 1
            total["trials"] += cfg.trials
            total["holds"] += holds
            total["violations"] += violated
            total["not_applicable"] += na
            na_by_check[check_id] = na_by_check.get(check_id, 0) + na
            trials_by_check[check_id] = trials_by_check.get(check_id, 0) + cfg.trials
            cells_out.append(
                {
                    "check": check_id,
                    "cell": cell,
                    "trials": cfg.trials,
                    "holds": holds,
                    "violations": violated,
                    "not_applicable": na,
                    "na_guards": dict(sorted(na_guards.items())),
                    "min_slack": None if not slacks else min(slacks),
                    "median_normalized_slack": None if not normalized else median(normalized),
                    "argmin": argmin_ref,
                    "violation_witnesses": witnesses,
                }
            )

    for check_id, n_na in sorted(na_by_check.items()):
        n_tr = trials_by_check[check_id]
        if n_tr and n_na / n_tr > 0.5:
            warnings.append(
                f"{check_id}: {n_na}/{n_tr} trials not applicable; tune the generator"
            )

    import mpmath

    return {
        "schema": "opbellman-report/1",
        "config": config_to_json(cfg, echo=True),
        "versions": {
            "opbellman": __version__,
            "numpy": np.__version__,
            "mpmath": mpmath.__version__,
        },
        "summary": dict(total),
        "warnings": warnings,
        "cells": cells_out,
    }


def report_to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


_CSV_CELL_KEYS = ("dim", "n", "m", "M", "p", "lam", "f", "map", "k")


def report_to_csv(report: dict) -> str:
    """Flat projection: one row per (check, parameter cell)."""
    header = (
        ["check"]
        + list(_CSV_CELL_KEYS)
        + ["trials", "holds", "violations", "not_applicable", "min_slack", "median_normalized_slack"]
    )
    lines = [",".join(header)]
    for row in report["cells"]:
        cell = row["cell"]
        values = [row["check"]]
        values += ["" if cell.get(k) is None else str(cell.get(k, "")) for k in _CSV_CELL_KEYS]
        values += [
            str(row["trials"]),
            str(row["holds"]),
            str(row["violations"]),
            str(row["not_applicable"]),
            "" if row["min_slack"] is None else repr(row["min_slack"]),
            "" if row["median_normalized_slack"] is None else repr(row["median_normalized_slack"]),
        ]
        lines.append(",".join(values))
    return "\n".join(lines) + "\n"


def report_to_text(report: dict) -> str:
    s = report["summary"]
    lines = [
        f"checks: {len(report['config']['checks'])}  trials: {s['trials']}  "
        f"holds: {s['holds']}  violations: {s['violations']}  not_applicable: {s['not_applicable']}"
    ]
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    by_check: dict[str, dict] = {}
    for row in report["cells"]:
        agg = by_check.setdefault(
            row["check"], {"trials": 0, "holds": 0, "violations": 0, "na": 0, "min_slack": math.inf}
        )
        agg["trials"] += row["trials"]
        agg["holds"] += row["holds"]
        agg["violations"] += row["violations"]
        agg["na"] += row["not_applicable"]
        if row["min_slack"] is not None:
            agg["min_slack"] = min(agg["min_slack"], row["min_slack"])
    for check_id, agg in by_check.items():
        ms = "n/a" if agg["min_slack"] is math.inf else f"{agg['min_slack']:.3e}"
        lines.append(
            f"{check_id:32s} trials={agg['trials']:<6d} holds={agg['holds']:<6d} "
            f"violations={agg['violations']:<4d} na={agg['na']:<4d} min_slack={ms}"
        )
    return "\n".join(lines) + "\n"
