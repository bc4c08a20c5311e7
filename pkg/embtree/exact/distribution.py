from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .params import Params


def double_factorial(m: int) -> int:
    """m!! as an exact integer, with 0!! = (-1)!! = 1."""
    if m < -1:
        raise ValueError(f"{m}!! is undefined")
    return math.prod(range(m, 0, -2))


@dataclass
class ExactDistribution:
    """Exact law of the tree size X, P(X = k) for k = 1..n.

    probabilities[k - 1] holds P(X = k). Every atom is an integer count of
    matchings divided by matchings = (dn - 1)!!.
    """

    params: Params
    probabilities: list[Fraction]
    matchings: int = field(default=0)
    source: str = "formula"

    def __post_init__(self):
        if not self.matchings:
            self.matchings = double_factorial(self.params.half_edges - 1)

    def total(self) -> Fraction:
        return sum(self.probabilities, Fraction(0))

    def counts(self) -> list[int]:
        """Number of matchings realising each atom."""
        out = []
        for p in self.probabilities:
            count = p * self.matchings
            assert count.denominator == 1, f"{p} is not a count of matchings"
            out.append(count.numerator)
        return out

    def tail(self) -> list[Fraction]:
        """P(X >= k) for k = 1..n."""
        out: list[Fraction] = []
        remaining = Fraction(1)
        for p in self.probabilities:
            out.append(remaining)
            remaining -= p
        return out

    def mean(self) -> Fraction:
        return sum(
            (k * p for k, p in enumerate(self.probabilities, start=1)), Fraction(0)
        )

    def probability(self, k: int) -> Fraction:
        if 1 <= k <= len(self.probabilities):
            return self.probabilities[k - 1]
        return Fraction(0)

    def to_dict(self, extra: Optional[dict[str, Any]] = None) -> dict[str, Any]:
        output: dict[str, Any] = {
            "params": self.params.to_dict(),
            "source": self.source,
            "matchings": self.matchings,
            "probabilities": [
                {
                    "k": k,
                    "p_num": p.numerator,
                    "p_den": p.denominator,
                    "p_float": float(p),
                }
                for k, p in enumerate(self.probabilities, start=1)
            ],
            "mean": str(self.mean()),
        }
        if extra:
            output |= extra
        return output
