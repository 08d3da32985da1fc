"""
Bennett's inequality and the specialised tail bound of the degree-1 concentration step.

Every bound is assembled in log space first and exponentiated once. A bound
whose exponent falls below the double range is clamped to the smallest
positive double; its log value stays available for reporting.
"""
from __future__ import annotations

import logging
import math
import sys
from dataclasses import dataclass

import numpy as np

from core.errors import DomainError

logger = logging.getLogger(__name__)

# Constants of the concentration step.
VARIANCE_FACTOR = 1e4
C_CAP = math.sqrt(2) * 1e-2
REGIME_T_MIN = 1.0 / 6.0

# exp() of a log outside this range leaves the normal doubles.
LOG_FLOAT_MIN = math.log(sys.float_info.min)
LOG_FLOAT_MAX = math.log(sys.float_info.max)
_SMALLEST_POSITIVE = math.ulp(0.0)


@dataclass(frozen=True, slots=True)
class TailParams:
    sigma_sq: float
    c: float
    t: float

    def __post_init__(self) -> None:
        for name in ("sigma_sq", "c", "t"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be a finite positive number, got {value!r}")


def bennett_h(u):
    """h(u) = (1+u) ln(1+u) - u for u >= 0; accepts scalars or arrays."""
    values = np.asarray(u, dtype=np.float64)
    if np.any(values < 0) or np.any(np.isnan(values)):
        raise DomainError("bennett_h is defined for u >= 0 only")
    out = (1.0 + values) * np.log1p(values) - values
    if out.ndim == 0:
        return float(out)
    return out


def h_lower_bound(u):
    """u ln(u/e), a lower bound on h(u) once u >= e."""
    values = np.asarray(u, dtype=np.float64)
    if np.any(values < math.e):
        raise DomainError("the bound u*ln(u/e) is only used for u >= e")
    out = values * (np.log(values) - 1.0)
    if out.ndim == 0:
        return float(out)
    return out


def _positive_exp(log_value: float) -> float:
    if log_value >= LOG_FLOAT_MAX:
        return math.inf
    return max(math.exp(log_value), _SMALLEST_POSITIVE)


def bennett_log_tail(p: TailParams) -> float:
    return -(p.sigma_sq / p.c**2) * bennett_h(p.t * p.c / p.sigma_sq)


def bennett_tail(p: TailParams) -> float:
    """Pr[sum X_i >= t] <= exp(-(sigma^2/c^2) h(t c / sigma^2))."""
    return _positive_exp(bennett_log_tail(p))


def lemma33_in_regime(eps_prime: float, c: float, t: float) -> bool:
    if not (eps_prime > 0 and c > 0):
        return False
    return t >= REGIME_T_MIN and t >= VARIANCE_FACTOR * math.e * eps_prime / c


def lemma33_tail(eps_prime: float, c: float, t: float) -> float:
    """exp(-(t/c) ln(1e-4 t c / (e eps'))), valid for t >= max(1/6, 1e4 e eps'/c)."""
    if not (eps_prime > 0 and c > 0 and t > 0):
        raise DomainError("eps_prime, c and t must be positive")
    if not lemma33_in_regime(eps_prime, c, t):
        floor = max(REGIME_T_MIN, VARIANCE_FACTOR * math.e * eps_prime / c)
        raise DomainError(f"t={t!r} is outside the regime t >= {floor:.6g}")
    exponent = -(t / c) * math.log(t * c / (VARIANCE_FACTOR * math.e * eps_prime))
    return _positive_exp(exponent)


def lemma33_c(r: int, eps_prime: float) -> float:
    """Uniform bound sqrt(1e4 r eps') on |Re g_i(x)|."""
    if r < 1 or eps_prime <= 0:
        raise DomainError("r must be >= 1 and eps_prime > 0")
    return math.sqrt(VARIANCE_FACTOR * r * eps_prime)


def lemma33_c_within_cap(r: int, eps_prime: float) -> bool:
    return lemma33_c(r, eps_prime) <= C_CAP * (1 + 1e-12)


def lemma33_integral_bound(eps_prime: float, c: float) -> float:
    """2 exp((1/(6c)) ln(6e4 e eps'/c)): the tail integrated from t = 1/6."""
    if eps_prime <= 0 or c <= 0:
        raise DomainError("eps_prime and c must be positive")
    exponent = (1.0 / (6.0 * c)) * math.log(6.0 * VARIANCE_FACTOR * math.e * eps_prime / c)
    return 2.0 * _positive_exp(exponent)


@dataclass(frozen=True, slots=True)
class TailReport:
    params: TailParams
    bennett: float
    bennett_log: float
    in_regime: bool
    lemma33: float | None
    integral_bound: float | None
    integral_below_eps: bool | None

    @property
    def bennett_underflows(self) -> bool:
        return self.bennett_log < LOG_FLOAT_MIN


def evaluate(p: TailParams) -> TailReport:
    """
    Bennett's bound for p, plus the specialised bounds when (sigma^2, c, t)
    fits the concentration regime with sigma^2 = 1e4 eps'.
    """
    eps_prime = p.sigma_sq / VARIANCE_FACTOR
    in_regime = lemma33_in_regime(eps_prime, p.c, p.t)
    lemma = integral = None
    below = None
    if in_regime:
        lemma = lemma33_tail(eps_prime, p.c, p.t)
        integral = lemma33_integral_bound(eps_prime, p.c)
        below = integral < eps_prime
    log_tail = bennett_log_tail(p)
    return TailReport(p, _positive_exp(log_tail), log_tail, in_regime, lemma, integral, below)
