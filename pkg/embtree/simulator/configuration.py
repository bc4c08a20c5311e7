from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from ..exact.params import Params
from ..utils.helpers import ParameterError


def half_edge(params: Params, vertex: int, slot: int) -> int:
    """Identifier of slot `slot` of `vertex`, in [0, n*d)."""
    if not (0 <= vertex < params.n and 0 <= slot < params.d):
        raise ParameterError(f"({vertex}, {slot}) is not a half-edge of {params}")
    return vertex * params.d + slot


def split_half_edge(params: Params, h: int) -> tuple[int, int]:
    """(vertex, slot) of half-edge h."""
    return divmod(h, params.d)


@dataclass(frozen=True)
class Configuration:
    """A perfect matching of the n*d half-edges, as a partner array.

    Loops and multi-edges are allowed. The array is read-only so a
    configuration can be shared between threads.
    """

    params: Params
    partner: np.ndarray

    def __post_init__(self):
        if self.partner.shape != (self.params.half_edges,):
            raise ParameterError(
                f"partner array has shape {self.partner.shape}, "
                f"expected ({self.params.half_edges},)"
            )
        self.partner.setflags(write=False)

    @classmethod
    def from_pairs(
        cls, params: Params, pairs: Iterable[tuple[int, int]]
    ) -> "Configuration":
        partner = np.full(params.half_edges, -1, dtype=np.int64)
        for a, b in pairs:
            if partner[a] != -1 or partner[b] != -1 or a == b:
                raise ParameterError(f"pair ({a}, {b}) overlaps another pair")
            partner[a] = b
            partner[b] = a
        if (partner < 0).any():
            raise ParameterError("pairs do not cover every half-edge")
        return cls(params, partner)

    def mate(self, h: int) -> int:
        return int(self.partner[h])

    def pairs(self) -> Iterator[tuple[int, int]]:
        for h, p in enumerate(self.partner.tolist()):
            if h < p:
                yield h, p

    def edges(self) -> list[tuple[int, int]]:
        """Projected multigraph edges (u, v) with u <= v."""
        d = self.params.d
        return sorted(
            (min(h // d, p // d), max(h // d, p // d)) for h, p in self.pairs()
        )

    def is_valid(self) -> bool:
        partner = self.partner
        idx = np.arange(len(partner))
        return bool((partner[partner] == idx).all() and (partner != idx).all())


def sample_configuration(params: Params, rng: np.random.Generator) -> Configuration:
    """A uniformly random configuration.

    Pairing consecutive entries of a uniform permutation gives every one of
    the (dn-1)!! matchings with the same probability, like pairing each
    lowest free half-edge with a uniform free partner.
    """
    order = rng.permutation(params.half_edges)
    partner = np.empty(params.half_edges, dtype=np.int64)
    partner[order[0::2]] = order[1::2]
    partner[order[1::2]] = order[0::2]
    return Configuration(params, partner)
