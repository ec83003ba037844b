"""Two-sided bounds for the Poisson entropies and the maximal probability.

All bounds hold for lam > 1; smaller intensities are refused.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .entropies import EntropyKind, _require_not_one, renyi
from .errors import DomainError, GammaOutOfRange
from .mittag_leffler import log_ml
from .series import DEFAULT_CONFIG, SeriesConfig, check_lambda, check_order, poisson_log_pmf

__all__ = [
    "GAMMA_STAR",
    "GAMMA_MAX",
    "H_ROOT",
    "BoundSet",
    "max_prob",
    "h_correction",
    "lower_bound_log_family",
    "upper_bound_shannon",
    "renyi_constants",
    "upper_bound_renyi",
    "optimal_gamma",
    "shannon_bounds",
    "renyi_bounds",
    "gen_renyi_bounds",
    "tsallis_bounds",
    "sharma_mittal_bounds",
    "bounds_for",
]

GAMMA_STAR = math.exp(-math.pi / math.e * (math.exp(1.0 / 6.0) - 1.0))
GAMMA_MAX = 1.0 - 1e-6
# h(lam) vanishes here: log(2)/2 = 1/(12 lam + 1)
H_ROOT = (1.0 / (0.5 * math.log(2.0)) - 1.0) / 12.0


@dataclass(frozen=True)
class BoundSet:
    """Lower and (optional) upper bound, with the constants behind them."""

    lower: float
    upper: float | None = None
    constants: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.upper is not None and not self.lower <= self.upper:
            raise AssertionError(f"inconsistent bounds: lower={self.lower} > upper={self.upper}")

    def contains(self, value: float) -> bool:
        """Strict enclosure lower < value (< upper when present)."""
        return self.lower < value and (self.upper is None or value < self.upper)


def _check_bound_lambda(lam: float) -> float:
    lam = check_lambda(lam)
    if lam <= 1.0:
        raise DomainError(f"bounds need lambda > 1, got {lam!r}")
    return lam


def max_prob(lam: float) -> float:
    """mu(lam) = max_i p_i(lam), attained at i = floor(lam)."""
    lam = check_lambda(lam)
    return math.exp(poisson_log_pmf(int(math.floor(lam)), lam))


def h_correction(lam: float) -> float:
    """h(lam) = log(1 + 1/max(lam - 1, 1)) / 2 - 1/(12 lam + 1).

    Positive for lam > H_ROOT (about 0.1571), in particular on lam > 1 where
    the bounds use it; below H_ROOT the expression turns negative.
    """
    lam = check_lambda(lam)
    h = 0.5 * math.log1p(1.0 / max(lam - 1.0, 1.0)) - 1.0 / (12.0 * lam + 1.0)
    if lam > 1.0:
        assert h > 0.0, h
    return h


def lower_bound_log_family(lam: float) -> float:
    """L(lam) = log(2 pi lam)/2 - h(lam); bounds Shannon, Renyi and both
    generalized Renyi entropies from below."""
    lam = _check_bound_lambda(lam)
    return 0.5 * math.log(2.0 * math.pi * lam) - h_correction(lam)


def upper_bound_shannon(lam: float) -> float:
    lam = _check_bound_lambda(lam)
    return 0.5 * math.log(2.0 * math.pi * lam) + 1.0 + 1.0 / (6.0 * lam)


def _check_gamma(gamma: float) -> float:
    if not math.isfinite(gamma) or gamma < GAMMA_STAR or gamma > GAMMA_MAX:
        raise GammaOutOfRange(f"gamma must lie in [{GAMMA_STAR:.6f}, {GAMMA_MAX}], got {gamma!r}")
    return float(gamma)


def renyi_constants(alpha: float, gamma: float) -> dict:
    """D(alpha, gamma) and C1 (alpha < 1) or C2 (alpha > 1)."""
    alpha = check_order(alpha)
    _require_not_one(alpha, "alpha")
    gamma = _check_gamma(gamma)
    d = abs(alpha - 1.0)
    D = (math.pi * d / (-math.e * alpha * math.log(gamma))) ** (d / 2.0)
    if alpha < 1.0:
        return {"gamma": gamma, "D": D, "C1": math.sqrt(alpha) * math.exp(1.0 / (12.0 * alpha)) * D}
    return {"gamma": gamma, "D": D, "C2": math.sqrt(alpha) * math.exp(-alpha / 12.0) / D}


def upper_bound_renyi(alpha: float, lam: float, gamma: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """Mittag-Leffler upper bound U_R(alpha, lam, gamma) on the Renyi entropy."""
    alpha = check_order(alpha)
    _require_not_one(alpha, "alpha")
    lam = _check_bound_lambda(lam)
    gamma = _check_gamma(gamma)
    common = 0.5 * math.log(math.pi / (-math.e * math.log(gamma)))
    if alpha < 1.0:
        x = (alpha * lam / gamma) ** alpha
        return ((log_ml(alpha, x, cfg) - alpha * lam) / (1.0 - alpha)
                + common
                + alpha / (2.0 * (1.0 - alpha)) * math.log(alpha)
                + 1.0 / (12.0 * alpha * (1.0 - alpha))
                + 0.5 * math.log(1.0 - alpha))
    x = (alpha * gamma * lam) ** alpha
    return ((alpha * lam - log_ml(alpha, x, cfg)) / (alpha - 1.0)
            + common
            - alpha / (2.0 * (alpha - 1.0)) * math.log(alpha)
            + alpha / (12.0 * (alpha - 1.0))
            + 0.5 * math.log(alpha - 1.0))


def _golden_section(f, a: float, b: float, tol: float) -> float:
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def optimal_gamma(alpha: float, lam_max: float, cfg: SeriesConfig = DEFAULT_CONFIG,
                  n_grid: int = 200, tol: float = 1e-4) -> float:
    """gamma in [gamma_*, 1 - 1e-6] minimising sup_lam (U_R - H_R).

    The supremum runs over ``n_grid`` log-spaced intensities in (1, lam_max];
    the minimiser is located by golden-section search to ``tol``.
    """
    alpha = check_order(alpha)
    _require_not_one(alpha, "alpha")
    lam_max = _check_bound_lambda(lam_max)
    grid = np.geomspace(1.0, lam_max, n_grid + 1)[1:]
    h_r = [renyi(alpha, lam, cfg) for lam in grid]

    def sup_gap(gamma: float) -> float:
        return max(upper_bound_renyi(alpha, lam, gamma, cfg) - h for lam, h in zip(grid, h_r))

    return _golden_section(sup_gap, GAMMA_STAR, GAMMA_MAX, tol)


def shannon_bounds(lam: float) -> BoundSet:
    return BoundSet(lower_bound_log_family(lam), upper_bound_shannon(lam))


def renyi_bounds(alpha: float, lam: float, gamma: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> BoundSet:
    return BoundSet(lower_bound_log_family(lam), upper_bound_renyi(alpha, lam, gamma, cfg),
                    renyi_constants(alpha, gamma))


def gen_renyi_bounds(lam: float) -> BoundSet:
    """Both generalized Renyi entropies share L(lam); no upper bound is known."""
    return BoundSet(lower_bound_log_family(lam))


def _power_family_bounds(order: float, lam: float, name: str) -> BoundSet:
    # mu(lam) < exp(h) / sqrt(2 pi lam) raised to (order - 1).
    order = check_order(order, name)
    _require_not_one(order, name)
    lam = _check_bound_lambda(lam)
    factor = (2.0 * math.pi * lam) ** ((1.0 - order) / 2.0) * math.exp(-(1.0 - order) * h_correction(lam))
    if order < 1.0:
        return BoundSet((factor - 1.0) / (1.0 - order))
    return BoundSet((1.0 - factor) / (order - 1.0), 1.0 / (order - 1.0))


def tsallis_bounds(alpha: float, lam: float) -> BoundSet:
    """Tsallis lower bound (and ceiling 1/(alpha - 1) when alpha > 1)."""
    return _power_family_bounds(alpha, lam, "alpha")


def sharma_mittal_bounds(alpha: float, beta: float, lam: float) -> BoundSet:
    """Sharma-Mittal bounds; they depend on beta only."""
    check_order(alpha)
    _require_not_one(alpha, "alpha")
    return _power_family_bounds(beta, lam, "beta")


def bounds_for(kind: EntropyKind | str, lam: float, alpha: float | None = None,
               beta: float | None = None, gamma: float | None = None,
               cfg: SeriesConfig = DEFAULT_CONFIG) -> BoundSet:
    """The bound set matching an entropy kind; Renyi needs ``gamma``."""
    kind = EntropyKind.parse(kind)
    if kind is EntropyKind.SHANNON:
        return shannon_bounds(lam)
    if kind is EntropyKind.RENYI:
        if gamma is None:
            raise DomainError("renyi bounds need gamma")
        return renyi_bounds(alpha, lam, gamma, cfg)
    if kind in (EntropyKind.GEN_RENYI1, EntropyKind.GEN_RENYI2):
        return gen_renyi_bounds(lam)
    if kind is EntropyKind.TSALLIS:
        return tsallis_bounds(alpha, lam)
    return sharma_mittal_bounds(alpha, beta, lam)
