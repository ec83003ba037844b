"""Leading-order large-lam approximants for psi and the entropies.

These are total closed forms valid for every lam > 0; whether they are
accurate at a given intensity is left to the caller.
"""

from __future__ import annotations

import enum
import math

from .entropies import ORDER_EPS, EntropyKind, _require_not_one
from .errors import DegenerateOrder, DomainError
from .series import check_lambda, check_order

__all__ = [
    "AsymptoteKind",
    "log_psi_asymptote",
    "psi_asymptote",
    "shannon_asymptote",
    "renyi_asymptote",
    "gen_renyi2_asymptote",
    "tsallis_asymptote",
    "sm_asymptote",
    "asymptote",
]


class AsymptoteKind(str, enum.Enum):
    PSI = "psi"
    SHANNON = "shannon"
    RENYI = "renyi"
    GEN_RENYI2 = "gen_renyi2"
    TSALLIS = "tsallis"
    SHARMA_MITTAL = "sharma_mittal"

    @property
    def arity(self) -> int:
        if self is AsymptoteKind.SHANNON:
            return 0
        if self in (AsymptoteKind.GEN_RENYI2, AsymptoteKind.SHARMA_MITTAL):
            return 2
        return 1


def _half_log_2pi(lam: float) -> float:
    return 0.5 * math.log(2.0 * math.pi * check_lambda(lam))


def log_psi_asymptote(alpha: float, lam: float) -> float:
    """log of alpha**-1/2 (2 pi lam)**((1 - alpha)/2)."""
    alpha = check_order(alpha)
    return (1.0 - alpha) * _half_log_2pi(lam) - 0.5 * math.log(alpha)


def psi_asymptote(alpha: float, lam: float) -> float:
    return math.exp(log_psi_asymptote(alpha, lam))


def shannon_asymptote(lam: float) -> float:
    return _half_log_2pi(lam) + 0.5


def renyi_asymptote(alpha: float, lam: float) -> float:
    """log(2 pi lam)/2 + log(alpha) / (2 (alpha - 1))."""
    alpha = check_order(alpha)
    _require_not_one(alpha, "alpha")
    const = math.log(alpha) / (2.0 * (alpha - 1.0))
    assert const > 0.0, const
    return _half_log_2pi(lam) + const


def gen_renyi2_asymptote(alpha: float, beta: float, lam: float) -> float:
    """log(2 pi lam)/2 + (log beta - log alpha) / (2 (beta - alpha))."""
    alpha = check_order(alpha)
    beta = check_order(beta, "beta")
    if abs(alpha - beta) <= ORDER_EPS:
        raise DegenerateOrder(f"alpha and beta must differ, got {alpha!r} and {beta!r}")
    const = (math.log(beta) - math.log(alpha)) / (2.0 * (beta - alpha))
    assert const > 0.0, const
    return _half_log_2pi(lam) + const


def tsallis_asymptote(alpha: float, lam: float) -> float:
    """Power law (2 pi lam)**((1-alpha)/2) / (sqrt(alpha)(1-alpha)) below 1,
    the ceiling 1/(alpha - 1) above."""
    alpha = check_order(alpha)
    _require_not_one(alpha, "alpha")
    if alpha > 1.0:
        check_lambda(lam)
        return 1.0 / (alpha - 1.0)
    return math.exp((1.0 - alpha) * _half_log_2pi(lam)) / (math.sqrt(alpha) * (1.0 - alpha))


def sm_asymptote(alpha: float, beta: float, lam: float) -> float:
    """Sharma-Mittal counterpart of :func:`tsallis_asymptote`, driven by beta."""
    alpha = check_order(alpha)
    beta = check_order(beta, "beta")
    _require_not_one(alpha, "alpha")
    _require_not_one(beta, "beta")
    if beta > 1.0:
        check_lambda(lam)
        return 1.0 / (beta - 1.0)
    log_scale = (1.0 - beta) / (2.0 * (1.0 - alpha)) * math.log(alpha)
    return math.exp((1.0 - beta) * _half_log_2pi(lam) - log_scale) / (1.0 - beta)


def asymptote(kind: AsymptoteKind | EntropyKind | str, lam: float, alpha: float | None = None,
              beta: float | None = None) -> float:
    """Dispatch by kind; the one-parameter generalized Renyi entropy has none."""
    if isinstance(kind, enum.Enum):
        name = kind.value
    elif str(kind).strip().lower() == "psi":
        name = "psi"
    else:
        name = EntropyKind.parse(kind).value
    if name == "psi":
        return psi_asymptote(alpha, lam)
    if name == "shannon":
        return shannon_asymptote(lam)
    if name == "renyi":
        return renyi_asymptote(alpha, lam)
    if name == "gen_renyi2":
        return gen_renyi2_asymptote(alpha, beta, lam)
    if name == "tsallis":
        return tsallis_asymptote(alpha, lam)
    if name == "sharma_mittal":
        return sm_asymptote(alpha, beta, lam)
    raise DomainError(f"no asymptote is available for {name}")
