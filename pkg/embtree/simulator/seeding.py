"""Per-trial random streams split from one master seed.

Trial i always gets the stream SeedSequence(master, spawn_key=(i,)), so a
run is reproducible whatever the number of workers and however the trials
are chunked between them.
"""

from __future__ import annotations

from typing import Union

import numpy as np

DEFAULT_SEED = 0x5EED_0001

# uniforms fetched per refill of a UniformStream
BLOCK = 1024


def trial_rng(master_seed: int, index: int) -> np.random.Generator:
    """The generator owned by trial `index`."""
    seq = np.random.SeedSequence(entropy=master_seed, spawn_key=(index,))
    return np.random.default_rng(seq)


class UniformStream:
    """Buffered uniform integer draws on top of a numpy Generator."""

    def __init__(self, rng: np.random.Generator):
        self.rng = rng
        self._block: list[float] = []
        self._next = 0

    def below(self, bound: int) -> int:
        """A uniform integer in [0, bound)."""
        if self._next == len(self._block):
            self._block = self.rng.random(BLOCK).tolist()
            self._next = 0
        u = self._block[self._next]
        self._next += 1
        return int(u * bound)


def as_stream(rng: Union[np.random.Generator, UniformStream, int]) -> UniformStream:
    if isinstance(rng, UniformStream):
        return rng
    if isinstance(rng, np.random.Generator):
        return UniformStream(rng)
    return UniformStream(np.random.default_rng(rng))
