"""Monotonicity of the entropies in lam, and the rho function behind it.

rho(alpha) is d/dlam log psi at lam = 1. The slope of the one-parameter
generalized Renyi entropy at lam = 1 is -rho'(alpha), so the sign of rho'
decides whether that entropy starts out decreasing.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .entropies import EntropyKind, EntropyQuery, entropy
from .errors import DomainError, EmptyGrid
from .series import (
    DEFAULT_CONFIG,
    LAMBDA_FLOOR,
    PoissonParams,
    SeriesConfig,
    check_order,
    log_factorial,
    mode_centred_window,
    psi_moments,
)

__all__ = [
    "RHO_ALPHA_MIN",
    "RhoPoint",
    "ScanReport",
    "rho",
    "rho_prime",
    "rho_point",
    "locate_alpha0",
    "entropy_dlambda",
    "scan_monotonicity",
    "gen_renyi2_anomaly_probe",
]

RHO_ALPHA_MIN = 1e-6


# --------------------------------------------------------------------------
# rho
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RhoPoint:
    alpha: float
    rho: float
    rho_prime: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.rho) and math.isfinite(self.rho_prime)):
            raise ArithmeticError(f"non-finite rho at alpha={self.alpha!r}")


def _rho_guess(alpha: float) -> int:
    # index where alpha * i * log(i) reaches about 40
    i = 40.0 / alpha
    for _ in range(30):
        i = 40.0 / (alpha * max(math.log(i), 1.0))
    return int(i) + 16


def _rho_moments(alpha: float, cfg: SeriesConfig) -> tuple[float, float]:
    """(E[i], Cov(i, log i!)) under weights proportional to (i!)**-alpha."""
    alpha = check_order(alpha)
    if alpha < RHO_ALPHA_MIN:
        raise DomainError(f"rho needs alpha >= {RHO_ALPHA_MIN:g}, got {alpha!r}")

    def env(idx: np.ndarray):
        lf = log_factorial(idx)
        logw = -alpha * lf
        return logw + np.log1p(idx) + np.log1p(lf), logw, lf

    win = mode_centred_window(env, 0, cfg, _rho_guess(alpha))
    _, logw, lf = win.arrays
    w = np.exp(logw - logw.max())
    w /= math.fsum(w.tolist())
    i = win.idx.astype(float)
    mean_i = math.fsum((w * i).tolist())
    mean_lf = math.fsum((w * lf).tolist())
    cov = math.fsum((w * (i - mean_i) * (lf - mean_lf)).tolist())
    return mean_i, cov


def rho(alpha: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """rho(alpha) = alpha (sum_i i/(i!)**alpha / sum_i 1/(i!)**alpha - 1)."""
    mean_i, _ = _rho_moments(alpha, cfg)
    return alpha * (mean_i - 1.0)


def rho_prime(alpha: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """d rho / d alpha = (E[i] - 1) - alpha Cov(i, log i!)."""
    mean_i, cov = _rho_moments(alpha, cfg)
    return (mean_i - 1.0) - alpha * cov


def rho_point(alpha: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> RhoPoint:
    mean_i, cov = _rho_moments(alpha, cfg)
    return RhoPoint(float(alpha), alpha * (mean_i - 1.0), (mean_i - 1.0) - alpha * cov)


def locate_alpha0(lo: float = 0.05, hi: float = 0.5, tol: float = 1e-8,
                  cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """The order where rho' changes sign, by bisection on [lo, hi]."""
    f_lo, f_hi = rho_prime(lo, cfg), rho_prime(hi, cfg)
    if f_lo * f_hi > 0.0:
        raise DomainError(f"rho' has the same sign at {lo!r} and {hi!r}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = rho_prime(mid, cfg)
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# --------------------------------------------------------------------------
# d/dlam of the entropies
# --------------------------------------------------------------------------

def _value_and_slope(kind: EntropyKind, alpha, beta, lam: float, cfg: SeriesConfig) -> tuple[float, float]:
    """Entropy and its analytic lam-derivative from one set of psi moments."""
    if kind is EntropyKind.SHANNON or (kind is EntropyKind.GEN_RENYI1 and alpha == 1.0):
        m = psi_moments(1.0, lam, cfg)
        return -m.mean_log_p, -m.d2logpsi
    m = psi_moments(alpha, lam, cfg)
    if kind is EntropyKind.GEN_RENYI1:
        return -m.mean_log_p, -m.d2logpsi
    if kind is EntropyKind.RENYI:
        return m.log_psi / (1.0 - alpha), m.dlogpsi_dlambda / (1.0 - alpha)
    if kind is EntropyKind.TSALLIS:
        return (math.expm1(m.log_psi) / (1.0 - alpha),
                math.exp(m.log_psi) * m.dlogpsi_dlambda / (1.0 - alpha))
    if kind is EntropyKind.SHARMA_MITTAL:
        expo = (1.0 - beta) / (1.0 - alpha)
        return (math.expm1(expo * m.log_psi) / (1.0 - beta),
                math.exp(expo * m.log_psi) * m.dlogpsi_dlambda / (1.0 - alpha))
    mb = psi_moments(beta, lam, cfg)
    return ((m.log_psi - mb.log_psi) / (beta - alpha),
            (m.dlogpsi_dlambda - mb.dlogpsi_dlambda) / (beta - alpha))


def _fd_step(lam: float) -> float:
    return max(1e-6, 1e-6 * lam)


def entropy_dlambda(kind: EntropyKind | str, lam: float, alpha: float | None = None,
                    beta: float | None = None, cfg: SeriesConfig = DEFAULT_CONFIG,
                    method: str = "analytic") -> float:
    """dH/dlam for any entropy kind.

    ``method="analytic"`` differentiates the psi representation in closed
    form (for the one-parameter generalized Renyi entropy this is minus the
    mixed derivative of log psi); ``method="fd"`` is a centred difference
    with step max(1e-6, 1e-6 lam).
    """
    q = EntropyQuery(EntropyKind.parse(kind), PoissonParams(lam, alpha, beta), cfg)
    lam = q.params.lam
    if method == "analytic":
        return _value_and_slope(q.kind, q.params.alpha, q.params.beta, lam, cfg)[1]
    if method != "fd":
        raise DomainError(f"unknown method {method!r}")
    h = _fd_step(lam)
    lo = max(lam - h, 2.0 * LAMBDA_FLOOR)
    f_hi = entropy(q.kind, lam + h, q.params.alpha, q.params.beta, cfg)
    f_lo = entropy(q.kind, lo, q.params.alpha, q.params.beta, cfg)
    return (f_hi - f_lo) / (lam + h - lo)


# --------------------------------------------------------------------------
# scans
# --------------------------------------------------------------------------

@dataclass
class ScanReport:
    """Entropy and slope on a lam grid, with the decreasing runs and the
    turning points of the slope."""

    kind: str
    alpha: float | None
    beta: float | None
    grid: list[float]
    values: list[float]
    derivatives: list[float]
    decreasing_intervals: list[tuple[float, float]] = field(default_factory=list)
    extrema: list[tuple[float, str]] = field(default_factory=list)
    proven_monotone: bool = False

    def __post_init__(self) -> None:
        if not (len(self.grid) == len(self.values) == len(self.derivatives)):
            raise ValueError("grid, values and derivatives must have equal length")
        if any(b <= a for a, b in zip(self.grid, self.grid[1:])):
            raise ValueError("grid must be strictly ascending")

    @property
    def is_monotone_increasing(self) -> bool:
        return not self.decreasing_intervals

    def minima(self) -> list[float]:
        return [lam for lam, k in self.extrema if k == "min"]

    def maxima(self) -> list[float]:
        return [lam for lam, k in self.extrema if k == "max"]

    def decreasing_within(self, lo: float, hi: float) -> bool:
        """True if some decreasing run overlaps [lo, hi]."""
        return any(a <= hi and b >= lo for a, b in self.decreasing_intervals)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "alpha": self.alpha,
            "beta": self.beta,
            "grid": list(self.grid),
            "values": list(self.values),
            "derivatives": list(self.derivatives),
            "decreasing_intervals": [list(iv) for iv in self.decreasing_intervals],
            "extrema": [{"lambda": lam, "kind": k} for lam, k in self.extrema],
            "proven_monotone": self.proven_monotone,
        }


def make_grid(lo: float, hi: float, step: float) -> np.ndarray:
    """lo, lo + step, ... up to hi (inclusive within rounding)."""
    if not all(math.isfinite(v) for v in (lo, hi, step)):
        raise DomainError("grid bounds must be finite")
    if not 0.0 < lo < hi:
        raise DomainError(f"need 0 < lo < hi, got {lo!r}, {hi!r}")
    if step <= 0.0:
        raise DomainError(f"step must be positive, got {step!r}")
    n = int(math.floor((hi - lo) / step + 1e-9)) + 1
    # rounding keeps decimal grids such as 0.05, 0.1, ... free of float noise
    return np.round(lo + step * np.arange(n), 12)


def _bisect_root(f, a: float, b: float, fa: float, tol: float) -> float:
    while b - a > tol:
        mid = 0.5 * (a + b)
        fm = f(mid)
        if (fm < 0.0) == (fa < 0.0):
            a, fa = mid, fm
        else:
            b = mid
    return 0.5 * (a + b)


def scan_monotonicity(kind: EntropyKind | str, lam_lo: float, lam_hi: float, step: float,
                      alpha: float | None = None, beta: float | None = None,
                      cfg: SeriesConfig = DEFAULT_CONFIG, tol_deriv: float = 1e-10,
                      method: str = "analytic", threads: int = 1,
                      refine_tol: float = 1e-6) -> ScanReport:
    """Evaluate H and dH/dlam on a grid and locate where H decreases.

    Decreasing intervals are maximal runs of grid points with slope below
    ``-tol_deriv``. Sign changes of the slope are refined by bisection to
    ``refine_tol`` and reported as local minima or maxima.
    """
    q = EntropyQuery(EntropyKind.parse(kind), PoissonParams(lam_hi, alpha, beta), cfg)
    kind, alpha, beta = q.kind, q.params.alpha, q.params.beta
    grid = make_grid(lam_lo, lam_hi, step)
    if grid.size < 3:
        raise EmptyGrid(f"scan grid has {grid.size} points, need at least 3")

    if method == "analytic":
        def point(lam: float) -> tuple[float, float]:
            return _value_and_slope(kind, alpha, beta, lam, cfg)
    elif method == "fd":
        def point(lam: float) -> tuple[float, float]:
            return (entropy(kind, lam, alpha, beta, cfg),
                    entropy_dlambda(kind, lam, alpha, beta, cfg, method="fd"))
    else:
        raise DomainError(f"unknown method {method!r}")

    lams = grid.tolist()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(point, lams))
    else:
        results = [point(lam) for lam in lams]
    values = [r[0] for r in results]
    derivs = [r[1] for r in results]

    intervals = []
    start = None
    for k, d in enumerate(derivs):
        if d < -tol_deriv:
            if start is None:
                start = k
        elif start is not None:
            intervals.append((lams[start], lams[k - 1]))
            start = None
    if start is not None:
        intervals.append((lams[start], lams[-1]))

    def slope(lam: float) -> float:
        return point(lam)[1]

    extrema = []
    for k in range(len(derivs) - 1):
        d0, d1 = derivs[k], derivs[k + 1]
        if d0 < 0.0 <= d1 or d0 > 0.0 >= d1:
            root = _bisect_root(slope, lams[k], lams[k + 1], d0, refine_tol)
            extrema.append((root, "min" if d0 < 0.0 else "max"))

    return ScanReport(kind.value, alpha, beta, lams, values, derivs, intervals, extrema)


def gen_renyi2_anomaly_probe(alpha: float, beta: float, lam_lo: float, lam_hi: float, step: float,
                             cfg: SeriesConfig = DEFAULT_CONFIG, **scan_kw) -> ScanReport:
    """Scan the two-parameter generalized Renyi entropy for decreasing runs.

    When one order is at most 1 and the other exceeds 1 the entropy is known
    to increase in lam, and an empty report flagged ``proven_monotone`` is
    returned without evaluating anything.
    """
    alpha = check_order(alpha)
    beta = check_order(beta, "beta")
    lo, hi = min(alpha, beta), max(alpha, beta)
    if lo <= 1.0 < hi:
        EntropyQuery(EntropyKind.GEN_RENYI2, PoissonParams(lam_hi, alpha, beta), cfg)
        make_grid(lam_lo, lam_hi, step)
        return ScanReport(EntropyKind.GEN_RENYI2.value, alpha, beta, [], [], [], proven_monotone=True)
    return scan_monotonicity(EntropyKind.GEN_RENYI2, lam_lo, lam_hi, step, alpha, beta, cfg, **scan_kw)
