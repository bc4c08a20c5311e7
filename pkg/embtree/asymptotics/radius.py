from __future__ import annotations

import math

import numpy as np

from ..exact.params import Params, as_int
from ..exact.tail import TailMode, tail_table


def ball_size(d: int, r: int) -> int:
    """Vertices of the complete d-regular tree of radius r."""
    d, r = as_int("d", d), as_int("r", r)
    if r < 0:
        raise ValueError(f"r={r} must be >= 0")
    if d == 2:
        return 1 + 2 * r
    return 1 + d * ((d - 1) ** r - 1) // (d - 2)


def radius_law(params: Params) -> float:
    """The headline prediction (1/2) log_{d-1} n."""
    params.check_asymptotic()
    return 0.5 * math.log(params.n) / math.log(params.d - 1)


def expected_ball_radius(params: Params) -> float:
    """Mean radius of the largest regular ball around a root.

    The ball reaches radius r exactly when the exposure absorbs every
    vertex up to distance r, so E(R) = sum_{r>=1} P(X >= ball_size(d, r)).
    """
    sizes = []
    r = 1
    while ball_size(params.d, r) <= params.n:
        sizes.append(ball_size(params.d, r))
        r += 1
    if not sizes:
        return 0.0
    table = tail_table(params, TailMode.LOG, k_max=sizes[-1])
    logs = np.asarray(table.values)[np.asarray(sizes) - 1]
    return float(np.exp(logs).sum())
