"""Brute force over every configuration of a tiny instance.

Each of the (dn-1)!! matchings is visited once by pairing the lowest free
half-edge with every higher free half-edge in turn, and the deterministic
exposure around the root is run on it. Counts are exact integers.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterator, Optional

from ..exact.distribution import ExactDistribution, double_factorial
from ..exact.params import Params
from ..simulator.growth import expose_matching
from ..utils.helpers import (
    CapExceededError,
    ParameterError,
    default_workers,
    run_chunks,
)
from ..utils.runlogging import runlog

# (13)!! = 135135 matchings
MAX_HALF_EDGES = 14

SIZE = "size"
RADIUS = "radius"


def check_enumerable(params: Params, root: int):
    if params.half_edges > MAX_HALF_EDGES:
        raise CapExceededError(
            f"d*n={params.half_edges} exceeds the enumeration cap ({MAX_HALF_EDGES})"
        )
    if not 0 <= root < params.n:
        raise ParameterError(f"root={root} is outside 0..{params.n - 1}")


def matchings(size: int, first: Optional[int] = None) -> Iterator[list[int]]:
    """Every perfect matching of range(size) as a partner list.

    The same list is mutated between yields. With `first` set, only the
    matchings pairing half-edge 0 with `first` are produced.
    """
    partner = [-1] * size

    def extend(lowest: int) -> Iterator[list[int]]:
        while lowest < size and partner[lowest] != -1:
            lowest += 1
        if lowest == size:
            yield partner
            return
        for other in range(lowest + 1, size):
            if partner[other] == -1:
                partner[lowest], partner[other] = other, lowest
                yield from extend(lowest + 1)
                partner[lowest] = partner[other] = -1

    if size == 0:
        yield partner
    elif first is None:
        yield from extend(0)
    else:
        partner[0], partner[first] = first, 0
        yield from extend(1)


def _branch_counts(task: tuple[int, int, int, int, str]) -> dict[int, int]:
    n, d, root, first, kind = task
    params = Params(n, d)
    counts: Counter[int] = Counter()
    for partner in matchings(params.half_edges, first):
        outcome = expose_matching(params, partner, root)
        counts[outcome.tree_size if kind == SIZE else outcome.ball_radius] += 1
    return dict(counts)


def _count(params: Params, root: int, kind: str, workers: Optional[int]) -> Counter:
    check_enumerable(params, root)
    workers = default_workers() if workers is None else workers
    # one branch per partner of half-edge 0
    tasks = [
        (params.n, params.d, root, first, kind)
        for first in range(1, params.half_edges)
    ]
    total: Counter[int] = Counter()
    for counts in run_chunks(_branch_counts, tasks, workers):
        total.update(counts)
    matched = sum(total.values())
    expected = double_factorial(params.half_edges - 1)
    assert matched == expected, f"visited {matched} matchings, expected {expected}"
    runlog().debug(
        "enumerated",
        extra={"params": params.to_dict(), "kind": kind, "matchings": matched},
    )
    return total


def enumerate_distribution(
    params: Params, root: int = 0, workers: Optional[int] = None
) -> ExactDistribution:
    """Exact law of X by exhaustive enumeration."""
    counts = _count(params, root, SIZE, workers)
    total = double_factorial(params.half_edges - 1)
    return ExactDistribution(
        params,
        [Fraction(counts.get(k, 0), total) for k in range(1, params.n + 1)],
        matchings=total,
        source="enumeration",
    )


def enumerate_radius_distribution(
    params: Params, root: int = 0, workers: Optional[int] = None
) -> dict[int, Fraction]:
    """Exact law of tree_ball_radius by exhaustive enumeration."""
    counts = _count(params, root, RADIUS, workers)
    total = double_factorial(params.half_edges - 1)
    return {r: Fraction(c, total) for r, c in sorted(counts.items())}
