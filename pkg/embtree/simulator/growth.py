"""Shell-by-shell exposure of the configuration around a root.

Half-edges of tree vertices wait in a queue in breadth-first order: vertices
in attachment order, slots in slot order. The front half-edge is paired, and
the process stops at the first partner already owned by a tree vertex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Optional, Sequence, Union

import numpy as np

from ..exact.params import Params
from ..utils.helpers import ParameterError
from .configuration import Configuration, half_edge, split_half_edge
from .seeding import UniformStream, as_stream


class StopReason(Enum):
    COLLISION = "collision"
    EXHAUSTED = "exhausted"

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class GrowthOutcome:
    """One exposure run.

    tree_size is X, the vertex count when the first cycle closed (the
    closing edge is not added). radius is the depth of the deepest tree
    vertex; collision_depth is the depth of the vertex whose half-edge
    closed the cycle, i.e. the number of complete regular shells.
    """

    tree_size: int
    radius: int
    shell_sizes: tuple[int, ...]
    stop_reason: StopReason
    collision_depth: Optional[int] = None

    @property
    def ball_radius(self) -> int:
        """Radius of the embedded regular ball around the root."""
        if self.collision_depth is None:
            return self.radius
        return self.collision_depth

    def to_dict(self) -> dict[str, Any]:
        return {
            "tree_size": self.tree_size,
            "radius": self.radius,
            "shell_sizes": list(self.shell_sizes),
            "stop_reason": str(self.stop_reason),
            "collision_depth": self.collision_depth,
        }


class UnpairedPool:
    """The unpaired half-edges 0..size-1 as a lazily materialised array.

    Removal swaps with the last entry; only displaced entries are stored,
    so a run costs O(steps) memory whatever n*d is.
    """

    def __init__(self, size: int):
        self.size = size
        self._at: dict[int, int] = {}
        self._pos: dict[int, int] = {}

    def remove(self, h: int):
        i = self._pos.get(h, h)
        last = self.size - 1
        tail = self._at.get(last, last)
        self._at[i] = tail
        self._pos[tail] = i
        self._at.pop(last, None)
        self._pos.pop(h, None)
        self.size = last

    def draw(self, stream: UniformStream) -> int:
        """Remove and return a uniformly chosen unpaired half-edge."""
        i = stream.below(self.size)
        h = self._at.get(i, i)
        self.remove(h)
        return h


def _expose(params: Params, root: int, pair: Callable[[int], int]) -> GrowthOutcome:
    """Every run ends in a collision, StopReason.EXHAUSTED is never produced:
    an odd number of half-edges stays unpaired once the front one is taken,
    and each attached vertex queues d - 1 >= 1 more."""
    d = params.d
    depth = {root: 0}
    shells = [1]
    queue = deque(half_edge(params, root, s) for s in range(d))
    while True:
        h = queue.popleft()
        p = pair(h)
        owner, _ = split_half_edge(params, h)
        w, _ = split_half_edge(params, p)
        if w in depth:
            return GrowthOutcome(
                len(depth),
                len(shells) - 1,
                tuple(shells),
                StopReason.COLLISION,
                depth[owner],
            )
        level = depth[owner] + 1
        depth[w] = level
        if level == len(shells):
            shells.append(0)
        shells[level] += 1
        base = w * d
        queue.extend(base + s for s in range(d) if base + s != p)


def grow_tree(
    params: Params, rng: Union[np.random.Generator, UniformStream, int], root: int = 0
) -> GrowthOutcome:
    """Run the stopped exposure process, drawing each partner uniformly
    among all half-edges still unpaired."""
    if not 0 <= root < params.n:
        raise ParameterError(f"root={root} is outside 0..{params.n - 1}")
    stream = as_stream(rng)
    pool = UnpairedPool(params.half_edges)

    def pair(h: int) -> int:
        pool.remove(h)
        return pool.draw(stream)

    return _expose(params, root, pair)


def expose_matching(
    params: Params, partner: Sequence[int], root: int
) -> GrowthOutcome:
    """Exposure of a complete matching given as a partner sequence."""
    if not 0 <= root < params.n:
        raise ParameterError(f"root={root} is outside 0..{params.n - 1}")
    return _expose(params, root, partner.__getitem__)


def exposure_tree_size(config: Configuration, root: int) -> GrowthOutcome:
    """The same exposure on a fixed configuration."""
    return expose_matching(config.params, config.partner.tolist(), root)


def tree_ball_radius(config: Configuration, root: int) -> int:
    """Largest r such that exposing config around root closes no cycle
    within distance r: every vertex up to distance r is reached once and
    only once, so the ball is an embedded d-regular tree."""
    return exposure_tree_size(config, root).ball_radius
