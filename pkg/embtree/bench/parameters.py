from __future__ import annotations

import argparse
from typing import Any, Optional

from ..exact.params import Params
from ..exact.tail import TailMode
from ..simulator.seeding import DEFAULT_SEED
from ..utils.helpers import default_workers

DEFAULT_GRID = [10**3, 10**4, 10**5, 10**6]
DEFAULT_RHO = 0.5

# keywords a job may set; each engine module declares the ones it reads
JOB_KEYWORDS = [
    "n",
    "d",
    "k",
    "k_max",
    "mode",
    "rho",
    "x",
    "scaled",
    "grid",
    "trials",
    "seed",
    "radius",
    "root",
]


class JobParameters:
    """A class to host the parameters of one job (the RunConfig).

    Keywords left to None were not given; getters return their defaults.
    """

    def __init__(
        self,
        job_name: str,
        engine_name: str,
        n: Optional[int] = None,
        d: Optional[int] = None,
        k: Optional[int] = None,
        k_max: Optional[int] = None,
        mode: Optional[str] = None,
        rho: Optional[float] = None,
        x: Optional[float] = None,
        scaled: Optional[bool] = None,
        grid: Optional[list[int]] = None,
        trials: Optional[int] = None,
        seed: Optional[int] = None,
        radius: Optional[bool] = None,
        root: Optional[int] = None,
        workers: Optional[int] = None,
        output_format: str = "csv",
    ):
        self.job_name = job_name
        self.engine_name = engine_name
        self.n = n
        self.d = d
        self.k = k
        self.k_max = k_max
        self.mode = mode
        self.rho = rho
        self.x = x
        # flags only count as set when true
        self.scaled = scaled or None
        self.grid = grid
        self.trials = trials
        self.seed = seed
        self.radius = radius or None
        self.root = root
        self.workers = workers
        self.output_format = output_format
        self.result_format: dict[str, Any] = {}

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "JobParameters":
        values = {name: getattr(args, name, None) for name in JOB_KEYWORDS}
        return cls(
            args.command,
            args.command,
            workers=args.workers,
            output_format=args.format,
            **values,
        )

    def get_value(self, name: str) -> Any:
        return getattr(self, name)

    def get_set_parameters(self) -> list[str]:
        """Keywords explicitly given to this job."""
        return [name for name in JOB_KEYWORDS if self.get_value(name) is not None]

    def get_name(self) -> str:
        return self.job_name

    def get_params(self) -> Params:
        assert self.n is not None and self.d is not None
        return Params(self.n, self.d)

    def get_d(self) -> int:
        assert self.d is not None
        return self.d

    def get_k(self) -> Optional[int]:
        return self.k

    def get_k_max(self) -> Optional[int]:
        return self.k_max

    def get_mode(self) -> TailMode:
        return TailMode(self.mode or TailMode.EXACT.value)

    def get_rho(self) -> float:
        return DEFAULT_RHO if self.rho is None else self.rho

    def get_x(self) -> Optional[float]:
        return self.x

    def is_scaled(self) -> bool:
        return bool(self.scaled)

    def get_grid(self) -> list[int]:
        return list(DEFAULT_GRID if self.grid is None else self.grid)

    def get_trials(self) -> int:
        assert self.trials is not None
        return self.trials

    def get_seed(self) -> int:
        return DEFAULT_SEED if self.seed is None else self.seed

    def wants_radius(self) -> bool:
        return bool(self.radius)

    def get_root(self) -> int:
        return 0 if self.root is None else self.root

    def get_workers(self) -> int:
        return default_workers() if self.workers is None else self.workers

    def get_format(self) -> str:
        return self.output_format

    def set_result_format(self, format: dict[str, Any]):
        """Set the job description merged into every result summary."""
        self.result_format = format

    def get_result_format(self) -> dict[str, Any]:
        return self.result_format

    def to_dict(self) -> dict[str, Any]:
        return {name: self.get_value(name) for name in self.get_set_parameters()}
