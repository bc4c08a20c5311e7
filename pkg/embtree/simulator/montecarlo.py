from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

from ..asymptotics.radius import expected_ball_radius, radius_law
from ..exact.params import Params
from ..utils.helpers import ParameterError, default_workers, run_chunks
from ..utils.runlogging import runlog
from .configuration import sample_configuration
from .growth import grow_tree, tree_ball_radius
from .seeding import DEFAULT_SEED, trial_rng

# chunks handed to each worker, more than one to balance uneven trials
CHUNKS_PER_WORKER = 8


@dataclass
class MonteCarloSummary:
    """Empirical tail of X over independent growth trials.

    empirical_tail[k - 1] estimates P(X >= k) for k = 1..max observed X.
    """

    params: Params
    trials: int
    seed: int
    empirical_tail: np.ndarray
    standard_errors: np.ndarray
    mean_x: float
    mean_radius: float
    mean_shell_sizes: list[float] = field(default_factory=list)

    def tail_at(self, k: int) -> tuple[float, float]:
        """(P_hat(X >= k), standard error)."""
        if k < 1:
            raise ParameterError(f"k={k} must be >= 1")
        if k > len(self.empirical_tail):
            return 0.0, 0.0
        return float(self.empirical_tail[k - 1]), float(self.standard_errors[k - 1])

    def rows(self) -> list[dict[str, Any]]:
        return [
            {"k": k, "p_hat": float(p), "se": float(se)}
            for k, (p, se) in enumerate(
                zip(self.empirical_tail, self.standard_errors), start=1
            )
        ]

    def summary(self) -> dict[str, Any]:
        return {
            "n": self.params.n,
            "d": self.params.d,
            "trials": self.trials,
            "seed": self.seed,
            "mean_x": self.mean_x,
            "mean_x_over_sqrt_n": self.mean_x / math.sqrt(self.params.n),
            "mean_radius": self.mean_radius,
            "mean_shell_sizes": self.mean_shell_sizes,
        }

    def to_dict(self) -> dict[str, Any]:
        return {"summary": self.summary(), "tail": self.rows()}


@dataclass
class RadiusSummary:
    """tree_ball_radius over independent (configuration, root) samples."""

    params: Params
    samples: int
    seed: int
    histogram: dict[int, int]
    mean_radius: float
    std: float
    predicted: Optional[float]
    expected: float

    @property
    def se(self) -> float:
        return self.std / math.sqrt(self.samples)

    def rows(self) -> list[dict[str, Any]]:
        return [
            {"r": r, "count": c, "p_hat": c / self.samples}
            for r, c in sorted(self.histogram.items())
        ]

    def summary(self) -> dict[str, Any]:
        return {
            "n": self.params.n,
            "d": self.params.d,
            "samples": self.samples,
            "seed": self.seed,
            "mean_radius": self.mean_radius,
            "std": self.std,
            "se": self.se,
            "radius_law": self.predicted,
            "expected_ball_radius": self.expected,
        }

    def to_dict(self) -> dict[str, Any]:
        return {"summary": self.summary(), "radius": self.rows()}


def chunk_ranges(total: int, workers: int) -> list[tuple[int, int]]:
    """Contiguous [start, stop) slices of range(total)."""
    pieces = max(1, workers * CHUNKS_PER_WORKER) if workers > 1 else 1
    size = max(1, math.ceil(total / pieces))
    return [(start, min(total, start + size)) for start in range(0, total, size)]


def _growth_chunk(task: tuple[int, int, int, int, int]):
    n, d, seed, start, stop = task
    params = Params(n, d)
    sizes = np.empty(stop - start, dtype=np.int64)
    radii = np.empty(stop - start, dtype=np.int64)
    shells: list[int] = []
    for j, index in enumerate(range(start, stop)):
        outcome = grow_tree(params, trial_rng(seed, index))
        sizes[j] = outcome.tree_size
        radii[j] = outcome.radius
        for depth, count in enumerate(outcome.shell_sizes):
            if depth == len(shells):
                shells.append(0)
            shells[depth] += count
    return sizes, radii, shells


def _radius_chunk(task: tuple[int, int, int, int, int]):
    n, d, seed, start, stop = task
    params = Params(n, d)
    radii = np.empty(stop - start, dtype=np.int64)
    for j, index in enumerate(range(start, stop)):
        rng = trial_rng(seed, index)
        config = sample_configuration(params, rng)
        root = int(rng.integers(params.n))
        radii[j] = tree_ball_radius(config, root)
    return radii


def _check_trials(trials: int):
    if isinstance(trials, bool) or not isinstance(trials, int) or trials < 1:
        raise ParameterError(f"trials={trials!r} must be a positive integer")


def monte_carlo(
    params: Params,
    trials: int,
    seed: int = DEFAULT_SEED,
    workers: Optional[int] = None,
) -> MonteCarloSummary:
    """Aggregate `trials` independent grow_tree runs.

    The result only depends on (params, trials, seed): trial i always draws
    from trial_rng(seed, i) and aggregation follows the trial index.
    """
    _check_trials(trials)
    workers = default_workers() if workers is None else workers
    started = time.monotonic()
    tasks = [
        (params.n, params.d, seed, start, stop)
        for start, stop in chunk_ranges(trials, workers)
    ]
    results = run_chunks(_growth_chunk, tasks, workers)

    sizes = np.concatenate([r[0] for r in results])
    radii = np.concatenate([r[1] for r in results])
    shell_totals: list[int] = []
    for _, _, shells in results:
        for depth, count in enumerate(shells):
            if depth == len(shell_totals):
                shell_totals.append(0)
            shell_totals[depth] += count

    counts = np.bincount(sizes)
    at_least = counts[::-1].cumsum()[::-1]
    p_hat = at_least[1:] / trials
    se = np.sqrt(p_hat * (1.0 - p_hat) / trials)

    summary = MonteCarloSummary(
        params=params,
        trials=trials,
        seed=seed,
        empirical_tail=p_hat,
        standard_errors=se,
        mean_x=int(sizes.sum()) / trials,
        mean_radius=int(radii.sum()) / trials,
        mean_shell_sizes=[total / trials for total in shell_totals],
    )
    runlog().info(
        "monte carlo",
        extra={
            "params": params.to_dict(),
            "trials": trials,
            "seed": seed,
            "workers": workers,
            "mean_x": summary.mean_x,
            "elapsed": time.monotonic() - started,
        },
    )
    return summary


def radius_sweep(
    params: Params,
    samples: int,
    seed: int = DEFAULT_SEED,
    workers: Optional[int] = None,
) -> RadiusSummary:
    """tree_ball_radius over `samples` fresh configurations and random roots."""
    _check_trials(samples)
    workers = default_workers() if workers is None else workers
    started = time.monotonic()
    tasks = [
        (params.n, params.d, seed, start, stop)
        for start, stop in chunk_ranges(samples, workers)
    ]
    radii = np.concatenate(run_chunks(_radius_chunk, tasks, workers))
    histogram = {int(r): int(c) for r, c in enumerate(np.bincount(radii)) if c}
    mean = int(radii.sum()) / samples
    std = float(np.std(radii, ddof=1)) if samples > 1 else 0.0

    summary = RadiusSummary(
        params=params,
        samples=samples,
        seed=seed,
        histogram=histogram,
        mean_radius=mean,
        std=std,
        predicted=radius_law(params) if params.d >= 3 else None,
        expected=expected_ball_radius(params),
    )
    runlog().info(
        "radius sweep",
        extra={
            "params": params.to_dict(),
            "samples": samples,
            "seed": seed,
            "workers": workers,
            "mean_radius": mean,
            "elapsed": time.monotonic() - started,
        },
    )
    return summary
