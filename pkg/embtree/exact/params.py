from __future__ import annotations

from dataclasses import dataclass
from numbers import Integral

from ..utils.helpers import CapExceededError, ParameterError, exact_cap


@dataclass(frozen=True)
class Params:
    """The (n, d) pair defining the configuration-model ensemble."""

    n: int
    d: int

    def __post_init__(self):
        # frozen: numpy integers are normalised through object.__setattr__
        object.__setattr__(self, "n", as_int("n", self.n))
        object.__setattr__(self, "d", as_int("d", self.d))
        if self.n < 1:
            raise ParameterError(f"n={self.n} must be >= 1")
        if self.d < 2:
            raise ParameterError(f"d={self.d} must be >= 2")
        if (self.n * self.d) % 2:
            raise ParameterError(
                f"d*n={self.d * self.n} is odd, half-edges cannot be paired"
            )

    @property
    def half_edges(self) -> int:
        return self.n * self.d

    def check_k(self, k: int) -> int:
        """Reject a tree size outside 1..n."""
        k = as_int("k", k)
        if not 1 <= k <= self.n:
            raise ParameterError(f"k={k} is outside 1..{self.n}")
        return k

    def check_exact(self, cap: int | None = None):
        """Reject n beyond the exact-mode cap."""
        cap = exact_cap() if cap is None else cap
        if self.n > cap:
            raise CapExceededError(
                f"n={self.n} exceeds the exact-mode cap ({cap}); "
                "use the log-space mode instead (--mode log)"
            )

    def check_asymptotic(self):
        check_asymptotic_degree(self.d)

    def to_dict(self) -> dict[str, int]:
        return {"n": self.n, "d": self.d}


def as_int(name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise ParameterError(f"{name}={value!r} is not an integer")
    return int(value)


def check_asymptotic_degree(d: int) -> int:
    """Asymptotic laws degenerate at d = 2."""
    d = as_int("d", d)
    if d < 3:
        raise ParameterError(f"d={d}: asymptotic operations require d >= 3")
    return d
