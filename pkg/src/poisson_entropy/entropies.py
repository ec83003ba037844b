"""The six entropies of the Poisson distribution.

Shannon is summed directly from its own series; every other entropy is a
function of ``log psi`` (or of its alpha-derivative for the one-parameter
generalized Renyi entropy), so nothing here ever exponentiates a value that
could leave double-precision range.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateOrder, DomainError
from .series import (
    DEFAULT_CONFIG,
    EvalResult,
    PoissonParams,
    SeriesConfig,
    check_lambda,
    check_order,
    log_factorial,
    log_pmf_array,
    mode_centred_window,
    psi_moments,
)

__all__ = [
    "EntropyKind",
    "EntropyQuery",
    "ORDER_EPS",
    "shannon",
    "renyi",
    "gen_renyi1",
    "gen_renyi2",
    "tsallis",
    "sharma_mittal",
    "entropy",
    "evaluate",
]

ORDER_EPS = 1e-12


class EntropyKind(str, enum.Enum):
    SHANNON = "shannon"
    RENYI = "renyi"
    GEN_RENYI1 = "gen_renyi1"
    GEN_RENYI2 = "gen_renyi2"
    TSALLIS = "tsallis"
    SHARMA_MITTAL = "sharma_mittal"

    @property
    def arity(self) -> int:
        """Number of order parameters (alpha, beta) the entropy takes."""
        if self is EntropyKind.SHANNON:
            return 0
        if self in (EntropyKind.GEN_RENYI2, EntropyKind.SHARMA_MITTAL):
            return 2
        return 1

    @classmethod
    def parse(cls, name: str | "EntropyKind") -> "EntropyKind":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("-", "_")
        aliases = {
            "sh": "shannon",
            "r": "renyi",
            "genrenyi1": "gen_renyi1",
            "gr1": "gen_renyi1",
            "genrenyi2": "gen_renyi2",
            "gr2": "gen_renyi2",
            "t": "tsallis",
            "sharmamittal": "sharma_mittal",
            "sm": "sharma_mittal",
        }
        key = aliases.get(key.replace("_", ""), aliases.get(key, key))
        try:
            return cls(key)
        except ValueError:
            raise DomainError(f"unknown entropy kind {name!r}") from None


def _require_not_one(value: float, name: str) -> None:
    if abs(value - 1.0) <= ORDER_EPS:
        raise DegenerateOrder(f"{name} must differ from 1 (|{name} - 1| > {ORDER_EPS:g}), got {value!r}")


@dataclass(frozen=True)
class EntropyQuery:
    """Which entropy to evaluate, at which orders and intensity."""

    kind: EntropyKind
    params: PoissonParams
    cfg: SeriesConfig = field(default=DEFAULT_CONFIG)

    def __post_init__(self) -> None:
        kind = EntropyKind.parse(self.kind)
        object.__setattr__(self, "kind", kind)
        alpha, beta = self.params.alpha, self.params.beta
        if kind.arity >= 1 and alpha is None:
            raise DomainError(f"{kind.value} needs alpha")
        if kind.arity == 2 and beta is None:
            raise DomainError(f"{kind.value} needs beta")
        if kind.arity == 0 and (alpha is not None or beta is not None):
            raise DomainError("shannon takes no order parameters")
        if kind.arity == 1 and beta is not None:
            raise DomainError(f"{kind.value} takes no beta")
        if kind in (EntropyKind.RENYI, EntropyKind.TSALLIS):
            _require_not_one(alpha, "alpha")
        elif kind is EntropyKind.GEN_RENYI2:
            if abs(alpha - beta) <= ORDER_EPS:
                raise DegenerateOrder(f"alpha and beta must differ, got {alpha!r} and {beta!r}")
        elif kind is EntropyKind.SHARMA_MITTAL:
            _require_not_one(alpha, "alpha")
            _require_not_one(beta, "beta")


# --------------------------------------------------------------------------
# Shannon
# --------------------------------------------------------------------------

def _shannon_result(lam: float, cfg: SeriesConfig) -> EvalResult:
    lam = check_lambda(lam)

    def env(idx: np.ndarray):
        logp = log_pmf_array(idx, lam)
        lf = log_factorial(idx)
        return logp + np.log1p(lf), logp, lf

    guess = int(math.sqrt(80.0 * max(lam, 1.0))) + 16
    win = mode_centred_window(env, int(math.floor(lam)), cfg, guess)
    _, logp, lf = win.arrays
    series = math.fsum((np.exp(logp) * lf).tolist())
    value = lam - lam * math.log(lam) + series
    tail = math.exp(win.log_tail) if win.log_tail > -math.inf else 0.0
    return EvalResult(value, math.log(value), win.terms_used, tail, False)


def shannon(lam: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """H_SH(lam) = lam - lam log lam + sum_{i>=2} p_i(lam) log(i!)."""
    return _shannon_result(lam, cfg).value


# --------------------------------------------------------------------------
# psi-based entropies
# --------------------------------------------------------------------------

def _moment_result(value: float, m) -> EvalResult:
    log_value = math.log(value) if value > 0 else -math.inf
    return EvalResult(value, log_value, m.terms_used, abs(value) * m.rel_tail, m.used_log_domain,
                      1 if value > 0 else (-1 if value < 0 else 0))


def renyi(alpha: float, lam: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """H_R(alpha, lam) = log psi(alpha, lam) / (1 - alpha)."""
    alpha = check_order(alpha)
    _require_not_one(alpha, "alpha")
    return psi_moments(alpha, lam, cfg).log_psi / (1.0 - alpha)


def gen_renyi1(alpha: float, lam: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """One-parameter generalized Renyi entropy, -d/dalpha log psi.

    Equals the p**alpha-weighted mean of -log p_i; at alpha == 1 this is the
    Shannon entropy and is delegated to :func:`shannon`.
    """
    alpha = check_order(alpha)
    if alpha == 1.0:
        return shannon(lam, cfg)
    return -psi_moments(alpha, lam, cfg).mean_log_p


def gen_renyi2(alpha: float, beta: float, lam: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """(log psi(alpha) - log psi(beta)) / (beta - alpha); symmetric in the orders."""
    alpha = check_order(alpha)
    beta = check_order(beta, "beta")
    if abs(alpha - beta) <= ORDER_EPS:
        raise DegenerateOrder(f"alpha and beta must differ, got {alpha!r} and {beta!r}")
    la = psi_moments(alpha, lam, cfg).log_psi
    lb = psi_moments(beta, lam, cfg).log_psi
    return (la - lb) / (beta - alpha)


def tsallis(alpha: float, lam: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """H_T(alpha, lam) = (psi - 1) / (1 - alpha)."""
    alpha = check_order(alpha)
    _require_not_one(alpha, "alpha")
    return math.expm1(psi_moments(alpha, lam, cfg).log_psi) / (1.0 - alpha)


def sharma_mittal(alpha: float, beta: float, lam: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """H_SM = (psi**((1 - beta)/(1 - alpha)) - 1) / (1 - beta).

    The exponent is applied to ``log psi`` so that large powers of a value far
    from 1 never overflow.
    """
    alpha = check_order(alpha)
    beta = check_order(beta, "beta")
    _require_not_one(alpha, "alpha")
    _require_not_one(beta, "beta")
    if alpha == beta:
        return tsallis(alpha, lam, cfg)
    expo = (1.0 - beta) / (1.0 - alpha)
    return math.expm1(expo * psi_moments(alpha, lam, cfg).log_psi) / (1.0 - beta)


def entropy(kind: EntropyKind | str, lam: float, alpha: float | None = None,
            beta: float | None = None, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """Dispatch to the entropy named by ``kind``."""
    return evaluate(EntropyQuery(EntropyKind.parse(kind), PoissonParams(lam, alpha, beta), cfg)).value


def evaluate(query: EntropyQuery) -> EvalResult:
    """Evaluate an :class:`EntropyQuery`, keeping the series diagnostics."""
    kind, p, cfg = query.kind, query.params, query.cfg
    if kind is EntropyKind.SHANNON or (kind is EntropyKind.GEN_RENYI1 and p.alpha == 1.0):
        return _shannon_result(p.lam, cfg)
    m = psi_moments(p.alpha, p.lam, cfg)
    if kind is EntropyKind.RENYI:
        value = m.log_psi / (1.0 - p.alpha)
    elif kind is EntropyKind.GEN_RENYI1:
        value = -m.mean_log_p
    elif kind is EntropyKind.TSALLIS:
        value = math.expm1(m.log_psi) / (1.0 - p.alpha)
    elif kind is EntropyKind.SHARMA_MITTAL:
        value = sharma_mittal(p.alpha, p.beta, p.lam, cfg)
    else:
        mb = psi_moments(p.beta, p.lam, cfg)
        value = (m.log_psi - mb.log_psi) / (p.beta - p.alpha)
        if mb.terms_used > m.terms_used:
            m = mb
    return _moment_result(value, m)
