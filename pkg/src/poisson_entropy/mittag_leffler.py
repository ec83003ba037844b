"""One-parameter Mittag-Leffler function E_alpha(x) for alpha > 0, x >= 0.

The series sum_k x**k / Gamma(alpha k + 1) is log-concave in k, so it is
summed around its peak with the same truncation rule as the Poisson series.
Once x**(1/alpha) exceeds the crossover the leading exponential term
(1/alpha) exp(x**(1/alpha)) is used instead, for alpha <= 2 only: above 2 the
neglected oscillating terms decay too slowly, while the series stays cheap.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import gammaln

from .errors import DomainError
from .series import DEFAULT_CONFIG, EvalResult, SeriesConfig, check_order, mode_centred_window

__all__ = ["ml", "log_ml", "CROSSOVER"]

CROSSOVER = 30.0


def _check(alpha: float, x: float) -> tuple[float, float]:
    alpha = check_order(alpha)
    if not math.isfinite(x) or x < 0.0:
        raise DomainError(f"x must be a finite nonnegative number, got {x!r}")
    return alpha, float(x)


def _series(alpha: float, x: float, cfg: SeriesConfig) -> EvalResult:
    if x == 0.0:
        return EvalResult(1.0, 0.0, 1, 0.0, False)
    log_x = math.log(x)

    def env(k: np.ndarray):
        return (k * log_x - gammaln(alpha * k + 1.0),)

    # The peak sits where alpha k ~ x**(1/alpha).
    peak = math.exp(log_x / alpha) / alpha
    mode = int(peak) if peak < 1e9 else int(1e9)
    guess = int(3.0 * math.sqrt(80.0 * max(peak, 1.0) / alpha)) + 16
    win = mode_centred_window(env, mode, cfg, guess)
    logt = win.arrays[0]
    top = float(logt.max())
    total = math.fsum(np.exp(logt - top).tolist())
    log_value = top + math.log(total)
    value = math.exp(log_value) if log_value < 709.0 else math.inf
    tail = math.exp(win.log_tail) if win.log_tail > -math.inf else 0.0
    return EvalResult(value, log_value, win.terms_used, tail, top > cfg.log_domain_threshold)


def _asymptotic(alpha: float, x: float) -> EvalResult:
    log_value = math.exp(math.log(x) / alpha) - math.log(alpha)
    value = math.exp(log_value) if log_value < 709.0 else math.inf
    return EvalResult(value, log_value, 0, 0.0, True)


def ml(alpha: float, x: float, cfg: SeriesConfig = DEFAULT_CONFIG, method: str = "auto") -> EvalResult:
    """E_alpha(x) with diagnostics.

    ``method`` is ``"auto"`` (series below the crossover or for alpha > 2,
    leading asymptotic otherwise), ``"series"`` or ``"asymptotic"``.
    """
    alpha, x = _check(alpha, x)
    if method == "series":
        return _series(alpha, x, cfg)
    if method == "asymptotic":
        if x == 0.0:
            raise DomainError("the asymptotic branch needs x > 0")
        return _asymptotic(alpha, x)
    if method != "auto":
        raise DomainError(f"unknown method {method!r}")
    if alpha <= 2.0 and x > 0.0 and math.log(x) / alpha > math.log(CROSSOVER):
        return _asymptotic(alpha, x)
    return _series(alpha, x, cfg)


def log_ml(alpha: float, x: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """log E_alpha(x), finite far beyond the range where E_alpha overflows."""
    return ml(alpha, x, cfg).log_value
