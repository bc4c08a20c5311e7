"""Limit laws of the tree size X as n grows.

P(X >= n^rho) -> 1 for rho < 1/2, exp(-(d-2)/(2d)) at rho = 1/2, 0 above,
and X / sqrt(n) converges to a law with tail exp(-x^2 (d-2)/(2d)).
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

from ..exact.params import Params, as_int, check_asymptotic_degree
from ..exact.tail import expectation_log, tail_log
from ..utils.helpers import ParameterError, default_workers
from ..utils.runlogging import runlog


@dataclass(frozen=True)
class LimitQuery:
    """Degree d, exponent rho in [0, 1) and an optional scale factor x."""

    d: int
    rho: float = 0.5
    x: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "d", check_asymptotic_degree(self.d))
        if not 0.0 <= self.rho < 1.0:
            raise ParameterError(f"rho={self.rho} is outside [0, 1)")
        if self.x is not None and not self.x > 0:
            raise ParameterError(f"x={self.x} must be > 0")

    @property
    def decay(self) -> float:
        """(d - 2) / (2d), the exponent constant of every limit law."""
        return (self.d - 2) / (2 * self.d)

    def to_dict(self) -> dict[str, Any]:
        return {"d": self.d, "rho": self.rho, "x": self.x}


@dataclass
class AsymptoticReport:
    """Finite-n values of a quantity next to its predicted limit."""

    kind: str
    query: dict[str, Any]
    points: list[tuple[int, float]]
    predicted: float
    gaps: list[float] = field(default_factory=list)

    def __post_init__(self):
        if not self.gaps:
            self.gaps = [abs(value - self.predicted) for _, value in self.points]

    @property
    def final_gap(self) -> float:
        return self.gaps[-1]

    def rows(self) -> list[dict[str, Any]]:
        return [
            {"n": n, "value": value, "predicted": self.predicted, "gap": gap}
            for (n, value), gap in zip(self.points, self.gaps)
        ]

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "query": self.query,
            "predicted": self.predicted,
            "final_gap": self.final_gap,
            "rows": self.rows(),
        }


def rho_size(n: int, rho: float) -> int:
    """k = round(n^rho), the integer stand-in for n^rho."""
    return max(1, round(n**rho))


def limit_expression_log(n: int, query: LimitQuery) -> float:
    n = as_int("n", n)
    k = rho_size(n, query.rho)
    if k >= n:
        raise ParameterError(f"n^rho={k} must stay below n={n}")
    d, dn = query.d, query.d * n
    return (
        (n - 1) * math.log1p((k - 1) / (n - k))
        + (dn / 2) * math.log1p(-(2 * k - 2) / (dn - 1))
        + (k - 1) * math.log1p((2 * k - 1 - d * k) / (dn - 2 * k + 1))
    )


def limit_expression(n: int, query: LimitQuery) -> float:
    """The finite-n expression at k = n^rho:

    ((n-1)/(n-k))^(n-1) ((dn-2k+1)/(dn-1))^(dn/2) ((dn-dk)/(dn-2k+1))^(k-1)
    """
    return math.exp(limit_expression_log(n, query))


def limit_value(query: LimitQuery) -> float:
    if query.rho < 0.5:
        return 1.0
    if query.rho == 0.5:
        return math.exp(-query.decay)
    return 0.0


def scaled_tail(query: LimitQuery) -> float:
    """Limit tail of X / sqrt(n): exp(-x^2 (d-2)/(2d))."""
    if query.x is None:
        raise ParameterError("scaled_tail needs a scale factor x")
    return math.exp(-query.x**2 * query.decay)


def scaled_tail_finite(n: int, query: LimitQuery) -> float:
    """P(X >= round(x sqrt(n))) at finite n."""
    if query.x is None:
        raise ParameterError("scaled_tail_finite needs a scale factor x")
    params = Params(n, query.d)
    k = max(1, round(query.x * math.sqrt(n)))
    if k > n:
        return 0.0
    return math.exp(tail_log(params, k))


def expectation_constant(d: int) -> float:
    """c(d) = integral_0^inf exp(-x^2 (d-2)/(2d)) dx = sqrt(pi d / (2 (d-2)))."""
    d = check_asymptotic_degree(d)
    return math.sqrt(math.pi * d / (2 * (d - 2)))


def _check_grid(n_grid: Sequence[int]) -> list[int]:
    if not n_grid:
        raise ParameterError("the n grid is empty")
    grid = [as_int("n", n) for n in n_grid]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ParameterError(f"the n grid {grid} is not increasing")
    return grid


def _evaluate(
    func: Callable[[int], float], grid: list[int], workers: Optional[int]
) -> list[tuple[int, float]]:
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(grid) == 1:
        values = [func(n) for n in grid]
    else:
        # map() keeps the grid order whatever the completion order
        with ThreadPoolExecutor(max_workers=workers) as executor:
            values = list(executor.map(func, grid))
    return list(zip(grid, values))


def convergence_report(
    query: LimitQuery, n_grid: Sequence[int], workers: Optional[int] = None
) -> AsymptoticReport:
    """Limit expression (or the scaled tail when query.x is set) along n_grid."""
    grid = _check_grid(n_grid)
    if query.x is not None:
        kind = "scaled"
        points = _evaluate(lambda n: scaled_tail_finite(n, query), grid, workers)
        predicted = scaled_tail(query)
    else:
        kind = "limit"
        points = _evaluate(lambda n: limit_expression(n, query), grid, workers)
        predicted = limit_value(query)
    report = AsymptoticReport(kind, query.to_dict(), points, predicted)
    runlog().info(
        "convergence report",
        extra={"kind": kind, "query": query.to_dict(), "final_gap": report.final_gap},
    )
    return report


def scaled_convergence_report(
    d: int, x: float, n_grid: Sequence[int], workers: Optional[int] = None
) -> AsymptoticReport:
    return convergence_report(LimitQuery(d, 0.5, x), n_grid, workers)


def expectation_report(
    d: int, n_grid: Sequence[int], workers: Optional[int] = None
) -> AsymptoticReport:
    """E(X)/sqrt(n) along n_grid against c(d)."""
    grid = _check_grid(n_grid)
    predicted = expectation_constant(d)
    points = _evaluate(
        lambda n: expectation_log(Params(n, d)) / math.sqrt(n), grid, workers
    )
    return AsymptoticReport("expectation", {"d": d}, points, predicted)
