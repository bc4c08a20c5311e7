"""Tail law of the embedded tree size X.

P(X >= k) = prod_{i=1}^{k-1} (dn - id) / (dn - (2i - 1))
          = d^(k-1) (n-1)!/(n-k)! * (dn - (2k-1))!! / (dn - 1)!!
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Optional, Union

import cachetools.func
import mpmath
import numpy as np
from scipy.special import gammaln

from ..utils.helpers import ModeError
from ..utils.runlogging import runlog
from .distribution import ExactDistribution, double_factorial
from .params import Params

# Beyond this many factors the log-gamma closed form replaces the log1p sum.
LOG1P_TERMS_MAX = 1 << 22


class TailMode(Enum):
    EXACT = "exact"
    LOG = "log"

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class TailTable:
    """P(X >= k) for k = 1..k_max.

    values[k - 1] is an exact Fraction in EXACT mode and a natural-log
    probability (float) in LOG mode.
    """

    params: Params
    mode: TailMode
    values: Union[tuple[Fraction, ...], np.ndarray]

    @property
    def k_max(self) -> int:
        return len(self.values)

    def value(self, k: int) -> Union[Fraction, float]:
        """P(X >= k), or ln P(X >= k) in log mode; 0 (or -inf) beyond n."""
        if k < 1:
            raise ValueError(f"k={k} must be >= 1")
        if k > self.params.n:
            return Fraction(0) if self.mode is TailMode.EXACT else -math.inf
        if k > self.k_max:
            raise IndexError(f"k={k} beyond the table (k_max={self.k_max})")
        v = self.values[k - 1]
        return v if self.mode is TailMode.EXACT else float(v)

    def probability(self, k: int) -> float:
        """P(X >= k) as a float, whatever the mode."""
        v = self.value(k)
        if self.mode is TailMode.EXACT:
            return float(v)
        return math.exp(v)

    def floats(self) -> np.ndarray:
        if self.mode is TailMode.EXACT:
            return np.array([float(v) for v in self.values])
        return np.exp(np.asarray(self.values))


def tail_product(params: Params, k: int, cap: Optional[int] = None) -> Fraction:
    """Exact P(X >= k) from the sequential product."""
    k = params.check_k(k)
    params.check_exact(cap)
    dn, d = params.half_edges, params.d
    num = den = 1
    for i in range(1, k):
        num *= dn - i * d
        den *= dn - (2 * i - 1)
    return Fraction(num, den)


def tail_double_factorial(
    params: Params, k: int, cap: Optional[int] = None
) -> Fraction:
    """Exact P(X >= k) from the double-factorial closed form."""
    k = params.check_k(k)
    params.check_exact(cap)
    n, d, dn = params.n, params.d, params.half_edges
    falling = math.factorial(n - 1) // math.factorial(n - k)
    return Fraction(
        d ** (k - 1) * falling * double_factorial(dn - (2 * k - 1)),
        double_factorial(dn - 1),
    )


def log_double_factorial_odd(m):
    """ln(m!!) for odd m >= -1, through log-gamma.

    With m = 2j - 1: ln((2j-1)!!) = lgamma(2j+1) - j ln 2 - lgamma(j+1).
    Accepts scalars or numpy arrays.
    """
    j = (np.asarray(m, dtype=np.float64) + 1.0) / 2.0
    return gammaln(2.0 * j + 1.0) - j * np.log(2.0) - gammaln(j + 1.0)


def _log_factors(params: Params, k_max: int) -> np.ndarray:
    """ln of each factor (dn - id)/(dn - 2i + 1), i = 1..k_max-1."""
    dn, d = float(params.half_edges), float(params.d)
    i = np.arange(1, k_max, dtype=np.float64)
    # (dn - id)/(dn - 2i + 1) = 1 + (2i - 1 - id)/(dn - 2i + 1)
    return np.log1p((2.0 * i - 1.0 - d * i) / (dn - 2.0 * i + 1.0))


def _log_gamma_form(params: Params, k):
    n, d, dn = params.n, params.d, params.half_edges
    k = np.asarray(k, dtype=np.float64)
    return (
        (k - 1.0) * np.log(d)
        + gammaln(n)
        - gammaln(n - k + 1.0)
        + log_double_factorial_odd(dn - 2.0 * k + 1.0)
        - log_double_factorial_odd(dn - 1.0)
    )


def tail_log(params: Params, k: int) -> float:
    """ln P(X >= k) in floating point, for any n.

    Small k sum log1p of the factors (no cancellation between huge
    log-gamma values); large k use the log-gamma closed form.
    """
    k = params.check_k(k)
    if k == 1:
        return 0.0
    if k - 1 <= LOG1P_TERMS_MAX:
        return float(np.sum(_log_factors(params, k)))
    return float(_log_gamma_form(params, k))


def tail_log_gamma(params: Params, k: int) -> float:
    """ln P(X >= k) from the log-gamma closed form only."""
    k = params.check_k(k)
    return float(_log_gamma_form(params, k))


def tail_log_extended(params: Params, k: int, digits: int = 40) -> mpmath.mpf:
    """Extended-precision ln P(X >= k), the cross-check oracle of tail_log."""
    k = params.check_k(k)
    dn, d = params.half_edges, params.d
    with mpmath.workdps(digits):
        total = mpmath.mpf(0)
        for i in range(1, k):
            total += mpmath.log(mpmath.mpf(dn - i * d) / (dn - (2 * i - 1)))
        return +total


@cachetools.func.lru_cache(maxsize=64)
def _exact_chain(n: int, d: int, k_max: int) -> tuple[Fraction, ...]:
    dn = n * d
    values = [Fraction(1)]
    current = Fraction(1)
    for i in range(1, k_max):
        current *= Fraction(dn - i * d, dn - (2 * i - 1))
        values.append(current)
    return tuple(values)


@cachetools.func.lru_cache(maxsize=64)
def _log_chain(n: int, d: int, k_max: int) -> np.ndarray:
    params = Params(n, d)
    split = min(k_max, LOG1P_TERMS_MAX + 1)
    head = np.concatenate(([0.0], np.cumsum(_log_factors(params, split))))
    if split < k_max:
        tail = _log_gamma_form(params, np.arange(split + 1, k_max + 1))
        head = np.concatenate((head, tail))
    # shared through the cache
    head.setflags(write=False)
    return head


def tail_table(
    params: Params,
    mode: TailMode = TailMode.EXACT,
    k_max: Optional[int] = None,
    cap: Optional[int] = None,
) -> TailTable:
    """Tail values for k = 1..k_max (default n)."""
    k_max = params.n if k_max is None else params.check_k(k_max)
    if mode is TailMode.EXACT:
        params.check_exact(cap)
        values: Any = _exact_chain(params.n, params.d, k_max)
    else:
        values = _log_chain(params.n, params.d, k_max)
    runlog().debug(
        "tail table",
        extra={"n": params.n, "d": params.d, "mode": str(mode), "k_max": k_max},
    )
    return TailTable(params, mode, values)


def expectation(params: Params, cap: Optional[int] = None) -> Fraction:
    """E(X) = sum_{k=1..n} P(X >= k), exactly."""
    table = tail_table(params, TailMode.EXACT, cap=cap)
    return sum(table.values, Fraction(0))


def expectation_log(params: Params) -> float:
    """E(X) in floating point through the log-space tail, for any n."""
    table = tail_table(params, TailMode.LOG)
    return math.fsum(np.exp(table.values))


def full_distribution(tail: TailTable) -> ExactDistribution:
    """P(X = k) = P(X >= k) - P(X >= k + 1), with P(X >= n + 1) = 0."""
    if tail.mode is not TailMode.EXACT:
        raise ModeError("full_distribution needs an exact tail table")
    if tail.k_max != tail.params.n:
        raise ModeError(
            "full_distribution needs the whole tail "
            f"(k_max={tail.k_max}, n={tail.params.n})"
        )
    values = list(tail.values) + [Fraction(0)]
    probabilities = [values[k] - values[k + 1] for k in range(tail.params.n)]
    return ExactDistribution(tail.params, probabilities, source="formula")
