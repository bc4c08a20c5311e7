from __future__ import annotations

from ..bench.engine import EngineBase, EngineModuleBase
from ..bench.parameters import JobParameters
from ..bench.results import JobResult
from ..simulator.montecarlo import monte_carlo, radius_sweep

GROWTH_HEADER = ["k", "p_hat", "se"]
RADIUS_HEADER = ["r", "count", "p_hat"]


class EngineModuleGrowth(EngineModuleBase):
    """Empirical tail of X over independent growth trials."""

    def __init__(self, engine: EngineBase):
        super().__init__(engine, "growth")
        self.add_module_parameter("n", required=True)
        self.add_module_parameter("d", required=True)
        self.add_module_parameter("trials", required=True)
        self.add_module_parameter("seed")

    def run(self, p: JobParameters) -> JobResult:
        summary = monte_carlo(
            p.get_params(), p.get_trials(), p.get_seed(), p.get_workers()
        )
        return self.make_result(p, GROWTH_HEADER, summary.rows(), summary.summary())


class EngineModuleRadius(EngineModuleBase):
    """tree_ball_radius over sampled (configuration, root) pairs."""

    def __init__(self, engine: EngineBase):
        super().__init__(engine, "radius")
        self.add_module_parameter("n", required=True)
        self.add_module_parameter("d", required=True)
        self.add_module_parameter("trials", required=True)
        self.add_module_parameter("seed")
        self.add_module_parameter("radius", required=True)

    def run(self, p: JobParameters) -> JobResult:
        summary = radius_sweep(
            p.get_params(), p.get_trials(), p.get_seed(), p.get_workers()
        )
        return self.make_result(p, RADIUS_HEADER, summary.rows(), summary.summary())


class Engine(EngineBase):
    """The Monte Carlo engine."""

    def __init__(self):
        super().__init__("simulate")
        self.add_module(EngineModuleGrowth(self))
        self.add_module(EngineModuleRadius(self))

    def select_module(self, params: JobParameters) -> str:
        return "radius" if params.wants_radius() else "growth"
