from __future__ import annotations

import math

from ..exact.params import Params
from ..exact.tail import tail_log


def stirling_tail_log(params: Params, k: int) -> float:
    """ln of the Stirling form of P(X >= k).

    ((n-1)/(n-k))^(n-1/2) / ((dn-1)/(dn-2k+1))^(dn/2) * ((dn-dk)/(dn-2k+1))^(k-1)

    The form divides by n - k, so k = n falls back to the product.
    """
    k = params.check_k(k)
    n, d, dn = params.n, params.d, params.half_edges
    if k == n:
        return tail_log(params, k)
    return (
        (n - 0.5) * math.log1p((k - 1) / (n - k))
        - (dn / 2) * math.log1p((2 * k - 2) / (dn - 2 * k + 1))
        + (k - 1) * math.log1p((2 * k - 1 - d * k) / (dn - 2 * k + 1))
    )


def stirling_tail_approx(params: Params, k: int) -> float:
    """Stirling approximation of P(X >= k)."""
    return math.exp(stirling_tail_log(params, k))
