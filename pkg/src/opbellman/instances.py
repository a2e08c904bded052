"""Seed-deterministic random instances satisfying inequality hypotheses.

Every generator is a pure function of (seed-derived rng); released
families re-verify their declared hypotheses through ``loewner_leq`` with
a positive margin, so the construction itself is never trusted.  Trial k
of a campaign draws from a counter-derived substream, which makes
campaigns order-independent.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError, ShapeError
from .means import RepresentingFunction, mean
from .spectral import DEFAULT_TOL, hermitize, identity, loewner_leq, sqrt_psd

#: Hypothesis margin every released instance must clear.
DEFAULT_MARGIN = 1e-6

#: Fraction of [m, M] kept clear at each end when drawing inner spectra.
EDGE_SHRINK = 0.02

#: Cap on gamma * ||sum of pairwise means|| keeping power bases away from 0.
BASE_CAP = 0.9

_MASK64 = (1 << 64) - 1


def subrng(seed: int, *key) -> np.random.Generator:
    """Independent substream for (seed, key); strings are crc32-folded."""
    words = [int(seed) & _MASK64]
    for part in key:
        if isinstance(part, str):
            words.append(zlib.crc32(part.encode("utf-8")))
        else:
            words.append(int(part) & _MASK64)
    return np.random.default_rng(np.random.SeedSequence(words))


@dataclass(frozen=True)
class GenConfig:
    """Hypothesis parameters for one generation cell."""

    dim: int = 2
    n: int = 1
    interval: tuple[float, float] = (0.5, 2.0)
    p: float = 0.5
    lam: float = 0.5
    seed: int = 0
    margin: float = DEFAULT_MARGIN
    max_rejects: int = 1000

    def __post_init__(self):
        m, M = self.interval
        if self.dim < 1 or self.n < 1:
            raise ParameterError("dim and n must be at least 1")
        if not m < M:
            raise ParameterError(f"need m < M, got interval {self.interval}")
        if not 0.0 < self.p < 1.0 or not 0.0 < self.lam < 1.0:
            raise ParameterError("p and lam must lie in (0, 1)")
        if self.margin <= 0.0:
            raise ParameterError("margin must be positive")


@dataclass
class InstanceFamily:
    """One concrete instance: operand families plus whatever a check needs."""

    hypothesis_tag: str
    A: list = field(default_factory=list)
    B: list | None = None
    weights: np.ndarray | None = None
    maps: list | None = None
    aux: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex Gaussian matrix with
    phase normalization of the triangular factor's diagonal (the standard
    construction)."""
    if dim < 1:
        raise ParameterError("dim must be at least 1")
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_spectrum_matrix(
    dim: int,
    interval: tuple[float, float],
    rng: np.random.Generator,
    pin_endpoints: bool = False,
) -> np.ndarray:
    """Hermitian matrix with eigenvalues drawn uniformly from [a, b]."""
    a, b = interval
    if a > b:
        raise ParameterError(f"need a <= b, got [{a}, {b}]")
    if pin_endpoints and dim < 2:
        raise ParameterError("pinning both endpoints needs dim >= 2")
    lam = rng.uniform(a, b, size=dim)
    if pin_endpoints:
        lam[0], lam[-1] = a, b
    lam = np.sort(lam)
    u = haar_unitary(dim, rng)
    return hermitize((u * lam) @ u.conj().T)


def random_pd(
    dim: int,
    rng: np.random.Generator,
    lo: float = 0.5,
    hi: float = 1.5,
) -> np.ndarray:
    """Positive definite matrix with spectrum in [lo, hi] (lo > 0)."""
    if lo <= 0.0:
        raise ParameterError("positive definite draw needs lo > 0")
    return random_spectrum_matrix(dim, (lo, hi), rng)


def random_contraction(dim: int, rng: np.random.Generator, kind: str = "ginibre") -> np.ndarray:
    """Random contraction: scaled Ginibre (possibly non-normal, possibly
    nearly singular) or a scaled Haar unitary (well-conditioned)."""
    if kind == "unitary":
        return rng.uniform(0.3, 0.98) * haar_unitary(dim, rng)
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return rng.uniform(0.2, 0.95) * g / np.linalg.norm(g, 2)


def random_sandwich_pair(
    a: np.ndarray,
    m: float,
    M: float,
    rng: np.random.Generator,
) -> tuple[np.ndarray, np.ndarray]:
    """(A, B) with m A <= B <= M A via B = A^{1/2} T A^{1/2}, m I <= T <= M I.

    The inner spectrum is shrunk away from m and M so the sandwich holds
    with a strictly positive margin; both sides are re-verified.
    """
    if not 0.0 < m < M:
        raise ParameterError(f"need 0 < m < M, got m={m}, M={M}")
    delta = EDGE_SHRINK * (M - m)
    root = sqrt_psd(a)
    t = random_spectrum_matrix(a.shape[0], (m + delta, M - delta), rng)
    b = hermitize(root @ t @ root)
    if not loewner_leq(m * a, b).holds or not loewner_leq(b, M * a).holds:
        raise ShapeError("sandwich construction failed verification")  # pragma: no cover
    return a, b


def random_subidentity_family(
    n: int,
    dim: int,
    rng: np.random.Generator,
    cap: float,
) -> list[np.ndarray]:
    """A_1..A_n >= 0 with sum A_j <= cap * I, cap in (0, 1).

    Raw positive-definite draws are rescaled by cap / lambda_max(sum), so
    each member keeps a healthy relative spectral floor.
    """
    if not 0.0 < cap < 1.0:
        raise ParameterError(f"cap must be in (0, 1), got {cap}")
    raw = [random_pd(dim, rng, 0.2, 1.0) for _ in range(n)]
    total = sum(raw)
    lam_max = float(np.linalg.eigvalsh(total)[-1])
    scale = cap / lam_max
    return [hermitize(scale * p) for p in raw]


def random_weights(n: int, rng: np.random.Generator) -> np.ndarray:
    """Positive weights summing to one."""
    if n < 1:
        raise ParameterError("need n >= 1")
    w = rng.uniform(0.2, 1.0, size=n)
    return w / w.sum()


def _feasible_scale(
    s: float,
    gamma_value: float,
    sum_a: np.ndarray,
    sum_b: np.ndarray,
    sum_means: np.ndarray,
    m: float,
    M: float,
    margin: float,
) -> bool:
    """Complement-sandwich feasibility of the family scaled by s."""
    dim = sum_a.shape[0]
    eye = identity(dim)
    g = gamma_value
    comp_a = eye - g * s * sum_a
    comp_b = eye - g * s * sum_b
    checks = [
        float(np.linalg.eigvalsh(hermitize(comp_a))[0]) >= margin,
        float(np.linalg.eigvalsh(hermitize(comp_b))[0]) >= margin,
        float(np.linalg.eigvalsh(hermitize(comp_b - m * comp_a))[0]) >= margin,
        float(np.linalg.eigvalsh(hermitize(M * comp_a - comp_b))[0]) >= margin,
        g * s * float(np.linalg.eigvalsh(sum_means)[-1]) <= BASE_CAP,
    ]
    return all(checks)


def complement_sandwich_family(
    cfg: GenConfig,
    f: RepresentingFunction,
    gamma_value: float,
    rng: np.random.Generator,
) -> InstanceFamily | None:
    """Pairs (A_j, B_j) with m A_j <= B_j <= M A_j whose gamma-weighted
    complements I - gamma sum A_j and I - gamma sum B_j satisfy the same
    [m, M] sandwich with positive margin.

    Strategy: draw sandwich pairs, then rescale the whole family by a
    scalar s in (0, 1] found by bisection (the feasible set is a lower
    s-interval).  Returns None once max_rejects draws fail; rejection is
    data for the campaign report, not an error.
    """
    m, M = cfg.interval
    if not m < 1.0 < M:
        raise ParameterError(f"complement sandwich needs m < 1 < M, got [{m}, {M}]")
    attempts = 0
    while attempts < cfg.max_rejects:
        attempts += 1
        pairs = []
        for _ in range(cfg.n):
            a = random_pd(cfg.dim, rng, 0.5, 1.5)
            pairs.append(random_sandwich_pair(a, m, M, rng))
        sum_a = sum(p[0] for p in pairs)
        sum_b = sum(p[1] for p in pairs)
        sum_means = sum(mean(p[0], p[1], f) for p in pairs)

        def feasible(s: float) -> bool:
            return _feasible_scale(s, gamma_value, sum_a, sum_b, sum_means, m, M, cfg.margin)

        if feasible(1.0):
            s = 1.0
        else:
            lo, hi = 1e-8, 1.0
            if not feasible(lo):
                continue
            for _ in range(60):
                mid = 0.5 * (lo + hi)
                if feasible(mid):
                    lo = mid
                else:
                    hi = mid
            s = lo * (1.0 - 1e-6)
        family = InstanceFamily(
            hypothesis_tag="complement_sandwich_family",
            A=[hermitize(s * p[0]) for p in pairs],
            B=[hermitize(s * p[1]) for p in pairs],
            meta={"attempts": attempts, "scale": s, "gamma": gamma_value},
        )
        if _verify_complement_family(family, gamma_value, m, M, cfg.margin):
            return family
    return None


def _verify_complement_family(
    fam: InstanceFamily,
    gamma_value: float,
    m: float,
    M: float,
    margin: float,
) -> bool:
    eye = identity(fam.A[0].shape[0])
    for a, b in zip(fam.A, fam.B):
        if loewner_leq(m * a, b).slack < margin or loewner_leq(b, M * a).slack < margin:
            return False
    comp_a = eye - gamma_value * sum(fam.A)
    comp_b = eye - gamma_value * sum(fam.B)
    for lhs, rhs in [
        (np.zeros_like(eye), comp_a),
        (np.zeros_like(eye), comp_b),
        (m * comp_a, comp_b),
        (comp_b, M * comp_a),
    ]:
        if loewner_leq(lhs, rhs).slack < margin:
            return False
    return True


def scalar_instance(
    kind: str,
    sizes: tuple[int, int],
    p: float,
    rng: np.random.Generator,
) -> dict:
    """Positive scalar arrays satisfying one classical-inequality hypothesis.

    ``sizes`` is (rows, cols) where applicable; constraints are imposed
    with a random contraction factor theta < 1 and re-verified.  The
    column constraints of the weighted Bellman kinds use the exponent 1/p,
    matching the displayed inequalities they feed.
    """
    rows, cols = sizes
    if rows < 1 or cols < 1:
        raise ParameterError("sizes must be at least 1")
    if kind in ("bellman", "popoviciu", "aczel"):
        if p < 1.0:
            raise ParameterError(f"{kind} needs p >= 1, got {p}")
    elif not 0.0 < p < 1.0:
        raise ParameterError(f"{kind} needs p in (0, 1), got {p}")

    if kind == "bellman":
        out = {"p": p}
        for name in ("a", "b"):
            head = rng.uniform(0.5, 2.0)
            raw = rng.uniform(0.1, 1.0, size=cols)
            theta = rng.uniform(0.2, 0.9)
            scale = (theta * head**p / np.sum(raw**p)) ** (1.0 / p)
            tail = raw * scale
            assert np.sum(tail**p) <= head**p
            out[name] = head
            out[f"{name}_j"] = tail
        return out

    if kind == "aczel" or kind == "popoviciu":
        q = 2.0 if kind == "aczel" else p
        out = {"p": q}
        for name in ("a", "b"):
            tail = rng.uniform(0.1, 1.0, size=cols)
            theta = rng.uniform(0.2, 0.9)
            head = (np.sum(tail**q) / theta) ** (1.0 / q)
            assert np.sum(tail**q) < head**q
            out[name] = head
            out[f"{name}_j"] = tail
        return out

    if kind in ("mp3", "eq3"):
        q = 1.0 / p
        a = rng.uniform(0.1, 1.0, size=(rows, cols))
        theta = rng.uniform(0.2, 0.9, size=cols)
        col_sums = np.sum(a**q, axis=0)
        a = a * (theta / col_sums) ** p
        assert np.all(np.sum(a**q, axis=0) <= 1.0)
        return {"a": a, "weights": random_weights(cols, rng), "p": p}

    if kind == "mp1":
        q = 1.0 / p
        caps = rng.uniform(0.5, 2.0, size=cols)
        a = rng.uniform(0.1, 1.0, size=(rows, cols))
        theta = rng.uniform(0.2, 0.9, size=cols)
        col_sums = np.sum(a**q, axis=0)
        a = a * (theta * caps**q / col_sums) ** p
        assert np.all(np.sum(a**q, axis=0) <= caps**q)
        return {"a": a, "caps": caps, "p": p}

    raise ParameterError(f"unknown scalar instance kind {kind!r}")


def verify_window_family(
    fam: InstanceFamily,
    m: float,
    M: float,
    margin: float = 0.0,
    tol=DEFAULT_TOL,
) -> bool:
    """Re-verify m I <= A_j <= M I for every member."""
    eye = identity(fam.A[0].shape[0])
    for a in fam.A:
        if loewner_leq(m * eye, a, tol).slack < margin:
            return False
        if loewner_leq(a, M * eye, tol).slack < margin:
            return False
    return True
