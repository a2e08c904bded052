"""Operator Bellman inequality verification toolkit.

Kubo-Ando operator means, unital positive linear maps and Mond-Pecaric
reverse constants, together with a seeded campaign runner that checks
every supported operator/scalar inequality on random constrained
instances and reports Loewner-order slack.
"""

__version__ = "0.1.0"

from .checks import CheckOutcome, check, registry_listing  # noqa: E402
from .constants import (  # noqa: E402
    Chord,
    ConstantResult,
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
from .means import (  # noqa: E402
    RepresentingFunction,
    arithmetic_w,
    composed,
    function_from_id,
    geometric_w,
    log_fn,
    mean,
    power_fn,
    powered,
    weighted_arithmetic,
    weighted_geometric,
)
from .spectral import (  # noqa: E402
    OrderVerdict,
    SpectralDecomposition,
    Tolerance,
    apply_function,
    as_hermitian,
    eig,
    hermitize,
    inv_sqrt_psd,
    is_contraction,
    loewner_leq,
    power_psd,
    sqrt_psd,
)

__all__ = [
    "CheckOutcome",
    "Chord",
    "ConstantResult",
    "OrderVerdict",
    "RepresentingFunction",
    "SpectralDecomposition",
    "Tolerance",
    "apply_function",
    "arithmetic_w",
    "as_hermitian",
    "beta",
    "beta_log",
    "check",
    "chord",
    "composed",
    "delta_bellman",
    "delta_affine_power",
    "eig",
    "function_from_id",
    "gamma",
    "gamma_power",
    "geometric_w",
    "hermitize",
    "inv_sqrt_psd",
    "is_contraction",
    "loewner_leq",
    "log_fn",
    "log_mean",
    "mean",
    "power_fn",
    "power_psd",
    "powered",
    "registry_listing",
    "sqrt_psd",
    "t_star",
    "weighted_arithmetic",
    "weighted_geometric",
    "zeta_aczel",
]
