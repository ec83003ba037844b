"""Entropies of the Poisson distribution: evaluation, bounds, asymptotics and
monotonicity analysis."""

from .analysis import (
    RhoPoint,
    ScanReport,
    entropy_dlambda,
    gen_renyi2_anomaly_probe,
    locate_alpha0,
    rho,
    rho_prime,
    scan_monotonicity,
)
from .asymptotics import (
    asymptote,
    gen_renyi2_asymptote,
    psi_asymptote,
    renyi_asymptote,
    shannon_asymptote,
    sm_asymptote,
    tsallis_asymptote,
)
from .bounds import (
    GAMMA_STAR,
    GAMMA_MAX,
    BoundSet,
    bounds_for,
    gen_renyi_bounds,
    h_correction,
    lower_bound_log_family,
    max_prob,
    optimal_gamma,
    renyi_bounds,
    shannon_bounds,
    sharma_mittal_bounds,
    tsallis_bounds,
    upper_bound_renyi,
    upper_bound_shannon,
)
from .entropies import (
    EntropyKind,
    EntropyQuery,
    entropy,
    evaluate,
    gen_renyi1,
    gen_renyi2,
    renyi,
    shannon,
    sharma_mittal,
    tsallis,
)
from .errors import (
    BoundViolation,
    DegenerateOrder,
    DomainError,
    EmptyGrid,
    GammaOutOfRange,
    PoissonEntropyError,
    TruncationFailure,
)
from .mittag_leffler import log_ml, ml
from .series import (
    DEFAULT_CONFIG,
    EvalResult,
    PoissonParams,
    SeriesConfig,
    d2_logpsi_dalpha_dlambda,
    dpsi_dalpha,
    dpsi_dlambda,
    log_psi,
    poisson_log_pmf,
    psi,
)

__version__ = "0.1.0"
