"""Stable evaluation of the Poisson power sum and its partial derivatives.

Every entropy in this package is a function of

    psi(alpha, lam) = sum_i p_i(lam) ** alpha,   p_i(lam) = lam**i exp(-lam) / i!

and of its first and mixed derivatives.  All sums are taken outward from the
mode ``floor(lam)`` with a verified geometric tail bound, and terms are always
formed in the log domain so that ``psi`` can be reported through its logarithm
when the value itself under- or overflows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, TruncationFailure

__all__ = [
    "SeriesConfig",
    "PoissonParams",
    "EvalResult",
    "PsiMoments",
    "DEFAULT_CONFIG",
    "log_factorial",
    "poisson_log_pmf",
    "log_pmf_array",
    "mode_centred_window",
    "psi_moments",
    "psi",
    "log_psi",
    "dpsi_dalpha",
    "dpsi_dlambda",
    "d2_logpsi_dalpha_dlambda",
]

LAMBDA_FLOOR = 1e-300
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

# lgamma(n + 1) - (n + 1/2) log n + n - log(2 pi) / 2, n = 1..20 (40-digit reference).
_STIRLERR_TABLE = np.array([
    0.0,
    0.08106146679532725822,
    0.041340695955409294094,
    0.027677925684998339149,
    0.020790672103765093112,
    0.016644691189821192163,
    0.013876128823070747999,
    0.011896709945891770095,
    0.010411265261972096497,
    0.0092554621827127329177,
    0.0083305634333628712565,
    0.007573675487951840795,
    0.0069428401072095298657,
    0.0064089941880042070684,
    0.0059513701127588477356,
    0.005554733551962801371,
    0.0052076559196096404407,
    0.0049013959484347378607,
    0.0046291537493340285924,
    0.0043855602492323242683,
    0.0041663196919969224575,
])
_LOG_FACTORIAL_TABLE = np.array([math.log(math.factorial(n)) for n in range(21)])


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation and stability policy shared by every infinite sum.

    ``rel_tol`` bounds the neglected tail relative to the partial sum,
    ``max_terms`` caps the number of terms per direction, and summation moves
    to a scaled log-sum-exp once ``alpha * lam`` exceeds
    ``log_domain_threshold``.
    """

    rel_tol: float = 1e-14
    max_terms: int = 10_000_000
    log_domain_threshold: float = 30.0

    def __post_init__(self) -> None:
        if not 0.0 < self.rel_tol < 1e-6:
            raise DomainError(f"rel_tol must lie in (0, 1e-6), got {self.rel_tol}")
        if int(self.max_terms) != self.max_terms or self.max_terms < 1000:
            raise DomainError(f"max_terms must be an integer >= 1000, got {self.max_terms}")
        if not self.log_domain_threshold > 0.0:
            raise DomainError("log_domain_threshold must be positive")


DEFAULT_CONFIG = SeriesConfig()


@dataclass(frozen=True)
class PoissonParams:
    """Intensity ``lam`` and the entropy orders ``alpha`` / ``beta``."""

    lam: float
    alpha: float | None = None
    beta: float | None = None

    def __post_init__(self) -> None:
        check_lambda(self.lam)
        if self.alpha is not None:
            check_order(self.alpha, "alpha")
        if self.beta is not None:
            check_order(self.beta, "beta")


@dataclass(frozen=True)
class EvalResult:
    """A series value with its truncation diagnostics.

    ``log_value`` is ``log(abs(value))`` and ``sign`` carries the sign, so a
    quantity whose magnitude underflows in double precision is still fully
    described by ``sign * exp(log_value)``.
    """

    value: float
    log_value: float
    terms_used: int
    tail_bound: float
    used_log_domain: bool
    sign: int = 1


def check_lambda(lam: float) -> float:
    if not (isinstance(lam, (int, float, np.floating, np.integer)) and math.isfinite(lam)):
        raise DomainError(f"lambda must be a finite real number, got {lam!r}")
    if lam <= LAMBDA_FLOOR:
        raise DomainError(f"lambda must be > {LAMBDA_FLOOR:g}, got {lam!r}")
    return float(lam)


def check_order(value: float, name: str = "alpha") -> float:
    if not (isinstance(value, (int, float, np.floating, np.integer)) and math.isfinite(value)):
        raise DomainError(f"{name} must be a finite real number, got {value!r}")
    if value <= 0.0:
        raise DomainError(f"{name} must be positive, got {value!r}")
    return float(value)


# --------------------------------------------------------------------------
# log-factorial and the Poisson log-pmf
# --------------------------------------------------------------------------

def _stirlerr(n: np.ndarray) -> np.ndarray:
    """Remainder of Stirling's formula for log(n!), n >= 1 integer."""
    out = np.empty(n.shape, dtype=float)
    small = n <= 20
    out[small] = _STIRLERR_TABLE[n[small].astype(np.int64)]
    big = ~small
    if big.any():
        nb = n[big].astype(float)
        nn = nb * nb
        out[big] = (1.0 / 12.0 - (1.0 / 360.0 - (1.0 / 1260.0 - (1.0 / 1680.0 - 1.0 / (1188.0 * nn)) / nn) / nn) / nn) / nb
    return out


def log_factorial(n: np.ndarray | int) -> np.ndarray | float:
    """log(n!) for nonnegative integers, exact table up to 20."""
    scalar = np.ndim(n) == 0
    arr = np.atleast_1d(np.asarray(n))
    if np.any(arr < 0):
        raise DomainError("log_factorial needs nonnegative integers")
    out = np.empty(arr.shape, dtype=float)
    small = arr <= 20
    out[small] = _LOG_FACTORIAL_TABLE[arr[small].astype(np.int64)]
    big = ~small
    if big.any():
        nb = arr[big].astype(float)
        out[big] = (nb + 0.5) * np.log(nb) - nb + _HALF_LOG_2PI + _stirlerr(arr[big])
    return float(out[0]) if scalar else out


def _bd0(x: np.ndarray, m: float) -> np.ndarray:
    """x log(x/m) + m - x without cancellation when x is close to m."""
    near = np.abs(x - m) < 0.1 * (x + m)
    out = np.empty(x.shape, dtype=float)
    far = ~near
    if far.any():
        xf = x[far]
        out[far] = xf * np.log(xf / m) + m - xf
    if near.any():
        # |v| < 1/19, so eight odd-power terms reach double precision.
        xn = x[near]
        v = (xn - m) / (xn + m)
        s = (xn - m) * v
        ej = 2.0 * xn * v
        v2 = v * v
        for j in range(1, 9):
            ej = ej * v2
            s = s + ej / (2 * j + 1)
        out[near] = s
    return out


def log_pmf_array(i: np.ndarray, lam: float) -> np.ndarray:
    """Vectorised log p_i(lam) via the saddle-point (deviance) form."""
    i = np.asarray(i)
    out = np.empty(i.shape, dtype=float)
    zero = i == 0
    out[zero] = -lam
    pos = ~zero
    if pos.any():
        ip = i[pos]
        xf = ip.astype(float)
        out[pos] = -_stirlerr(ip) - _bd0(xf, lam) - 0.5 * np.log(2.0 * math.pi * xf)
    return out


def poisson_log_pmf(i: int, lam: float) -> float:
    """Exact log of P(X = i) for X ~ Poisson(lam).

    >>> poisson_log_pmf(0, 1.0)
    -1.0
    """
    lam = check_lambda(lam)
    if int(i) != i or i < 0:
        raise DomainError(f"i must be a nonnegative integer, got {i!r}")
    return float(log_pmf_array(np.array([int(i)], dtype=np.int64), lam)[0])


# --------------------------------------------------------------------------
# mode-centred truncation
# --------------------------------------------------------------------------

EnvFn = Callable[[np.ndarray], Sequence[np.ndarray]]


def _stop_index(e: np.ndarray, log_base: float, log_tol: float) -> tuple[int, float] | None:
    """First position in ``e`` (terms ordered away from the mode) where the
    stopping rule holds, with the log tail estimate there."""
    if e.size < 4:
        return None
    part = np.logaddexp(log_base, np.logaddexp.accumulate(e))
    small = (e - part) < log_tol
    run = small[2:-1] & small[1:-2] & small[:-3]
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        r = np.exp(e[3:] - e[2:-1])
        tail = e[2:-1] - np.log1p(-np.minimum(r, 1.0))
    ok = run & (r < 1.0) & (tail < log_tol + part[2:-1])
    hits = np.flatnonzero(ok)
    if not hits.size:
        return None
    k = int(hits[0])
    return k + 2, float(tail[k])


@dataclass(frozen=True)
class Window:
    """Indices kept by the mode-centred rule, in ascending order."""

    idx: np.ndarray
    arrays: list
    log_tail: float

    @property
    def terms_used(self) -> int:
        return int(self.idx.size)


def mode_centred_window(env_fn: EnvFn, mode: int, cfg: SeriesConfig, guess: int) -> Window:
    """Select the summation window of a log-concave series around ``mode``.

    ``env_fn(idx)`` returns a sequence of arrays; the first is the log of a
    majorant of every integrand that will be summed over the window, the rest
    are payloads carried along.  Each direction stops once three consecutive
    terms fall below ``rel_tol`` times the running partial sum and the
    geometric tail estimate ``term / (1 - ratio)`` does as well.  The lower
    direction also stops at index 0, where the sum is exhausted.
    """
    log_tol = math.log(cfg.rel_tol)
    width = max(int(guess), 8)
    while True:
        lo = max(mode - width, 0)
        hi = mode + width
        idx = np.arange(lo, hi + 1, dtype=np.int64)
        arrays = env_fn(idx)
        e = arrays[0]
        c = mode - lo
        log_base = float(e[c])
        up = _stop_index(e[c + 1:], log_base, log_tol)
        if lo == 0:
            down = None
            dn_ok = True
            dn_cut, dn_tail = 0, -math.inf
        else:
            down = _stop_index(e[c - 1::-1], log_base, log_tol)
            dn_ok = down is not None
            if dn_ok:
                dn_cut, dn_tail = c - 1 - down[0], down[1]
        if up is not None and dn_ok:
            up_cut = c + 1 + up[0]
            if up_cut + 1 - dn_cut > cfg.max_terms:
                break
            sl = slice(dn_cut, up_cut + 1)
            return Window(idx[sl], [a[sl] for a in arrays], float(np.logaddexp(up[1], dn_tail)))
        if 2 * width + 1 > cfg.max_terms:
            break
        width = min(2 * width, cfg.max_terms)
    raise TruncationFailure(
        f"series tail not below rel_tol={cfg.rel_tol:g} within max_terms={cfg.max_terms}"
    )


def _width_guess(lam: float, alpha: float) -> int:
    return int(math.sqrt(80.0 * max(lam, 1.0) / alpha)) + 16


# --------------------------------------------------------------------------
# psi and its derivatives
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class PsiMoments:
    """log psi together with the weighted moments that give its derivatives.

    With weights ``w_i = p_i**alpha / psi``, ``log p`` the log-pmf and
    ``g = i / lam - 1``:

    * d/dalpha log psi = E[log p]
    * d/dlam log psi = alpha E[g]
    * d2/dalpha dlam log psi = E[g] + alpha Cov(g, log p)
    """

    alpha: float
    lam: float
    log_psi: float
    mean_log_p: float
    mean_g: float
    cov_g_log_p: float
    terms_used: int
    rel_tail: float
    used_log_domain: bool

    @property
    def dlogpsi_dalpha(self) -> float:
        return self.mean_log_p

    @property
    def dlogpsi_dlambda(self) -> float:
        return self.alpha * self.mean_g

    @property
    def d2logpsi(self) -> float:
        return self.mean_g + self.alpha * self.cov_g_log_p


def _psi_window(alpha: float, lam: float, cfg: SeriesConfig, with_moments: bool) -> Window:
    def env(idx: np.ndarray):
        logp = log_pmf_array(idx, lam)
        logw = alpha * logp
        if not with_moments:
            return logw, logp
        g = idx / lam - 1.0
        a = np.abs(logp)
        majorant = logw + np.log1p(a) + np.log1p(alpha * a) + np.log1p(np.abs(g))
        return majorant, logp

    return mode_centred_window(env, int(math.floor(lam)), cfg, _width_guess(lam, alpha))


def _fsum(x: np.ndarray) -> float:
    return math.fsum(x.tolist())


def _fsum_scaled(logw: np.ndarray) -> tuple[float, np.ndarray, float]:
    top = float(logw.max())
    w = np.exp(logw - top)
    return top, w, _fsum(w)


def psi_moments(alpha: float, lam: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> PsiMoments:
    """One pass over the window producing log psi and its derivative moments."""
    alpha = check_order(alpha)
    lam = check_lambda(lam)
    win = _psi_window(alpha, lam, cfg, with_moments=True)
    logp = win.arrays[1]
    top, w, total = _fsum_scaled(alpha * logp)
    g = win.idx / lam - 1.0
    mean_l = _fsum(w * logp) / total
    mean_g = _fsum(w * g) / total
    cov = _fsum(w * (g - mean_g) * (logp - mean_l)) / total
    log_env_total = float(np.logaddexp.reduce(win.arrays[0]))
    rel_tail = math.exp(win.log_tail - log_env_total) if win.log_tail > -math.inf else 0.0
    return PsiMoments(
        alpha=alpha,
        lam=lam,
        log_psi=top + math.log(total),
        mean_log_p=mean_l,
        mean_g=mean_g,
        cov_g_log_p=cov,
        terms_used=win.terms_used,
        rel_tail=rel_tail,
        used_log_domain=alpha * lam > cfg.log_domain_threshold,
    )


def _signed_result(log_abs: float, sign: int, m: PsiMoments) -> EvalResult:
    value = sign * math.exp(log_abs) if log_abs < 709.0 else sign * math.inf
    return EvalResult(
        value=value,
        log_value=log_abs,
        terms_used=m.terms_used,
        tail_bound=abs(value) * m.rel_tail,
        used_log_domain=m.used_log_domain,
        sign=sign,
    )


def psi(alpha: float, lam: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    """psi(alpha, lam) = sum_i p_i(lam)**alpha.

    Below the log-domain threshold the terms are exponentiated and added with
    exact (``math.fsum``) accumulation; above it the sum is formed as a scaled
    log-sum-exp and ``value`` may underflow while ``log_value`` stays finite.
    """
    alpha = check_order(alpha)
    lam = check_lambda(lam)
    win = _psi_window(alpha, lam, cfg, with_moments=False)
    logw = win.arrays[0]
    if alpha * lam > cfg.log_domain_threshold:
        top, _, total = _fsum_scaled(logw)
        log_value = top + math.log(total)
        value = math.exp(log_value)
        used_log = True
    else:
        value = _fsum(np.exp(logw))
        log_value = math.log(value)
        used_log = False
    tail = math.exp(win.log_tail) if win.log_tail > -math.inf else 0.0
    return EvalResult(value, log_value, win.terms_used, tail, used_log)


def log_psi(alpha: float, lam: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """Natural log of psi, always accumulated as a scaled log-sum-exp."""
    alpha = check_order(alpha)
    lam = check_lambda(lam)
    win = _psi_window(alpha, lam, cfg, with_moments=False)
    top, _, total = _fsum_scaled(win.arrays[0])
    return top + math.log(total)


def dpsi_dalpha(alpha: float, lam: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    """sum_i p_i**alpha log p_i; strictly negative."""
    m = psi_moments(alpha, lam, cfg)
    return _signed_result(m.log_psi + math.log(-m.mean_log_p), -1, m)


def dpsi_dlambda(alpha: float, lam: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    """alpha exp(-alpha lam) sum_i (i - lam) lam**(alpha i - 1) / (i!)**alpha."""
    m = psi_moments(alpha, lam, cfg)
    d = m.dlogpsi_dlambda
    if d == 0.0:
        return EvalResult(0.0, -math.inf, m.terms_used, 0.0, m.used_log_domain, 0)
    return _signed_result(m.log_psi + math.log(abs(d)), 1 if d > 0 else -1, m)


def d2_logpsi_dalpha_dlambda(alpha: float, lam: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """Mixed partial of log psi in alpha and lambda."""
    return psi_moments(alpha, lam, cfg).d2logpsi
