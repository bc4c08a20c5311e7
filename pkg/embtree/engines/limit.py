from __future__ import annotations

from ..asymptotics.limits import (
    AsymptoticReport,
    LimitQuery,
    convergence_report,
    scaled_convergence_report,
)
from ..bench.engine import EngineBase, EngineModuleBase
from ..bench.parameters import JobParameters
from ..bench.results import JobResult

HEADER = ["n", "value", "predicted", "gap"]


class EngineModuleReport(EngineModuleBase):
    def report(self, p: JobParameters) -> AsymptoticReport:
        raise NotImplementedError

    def run(self, p: JobParameters) -> JobResult:
        report = self.report(p)
        summary = report.query | {
            "kind": report.kind,
            "predicted": report.predicted,
            "final_gap": report.final_gap,
        }
        return self.make_result(p, HEADER, report.rows(), summary)


class EngineModuleLimit(EngineModuleReport):
    """P(X >= n^rho) along the n grid against its limit."""

    def __init__(self, engine: EngineBase):
        super().__init__(engine, "limit")
        self.add_module_parameter("d", required=True)
        self.add_module_parameter("rho")
        self.add_module_parameter("grid")

    def report(self, p: JobParameters) -> AsymptoticReport:
        query = LimitQuery(p.get_d(), p.get_rho())
        return convergence_report(query, p.get_grid(), p.get_workers())


class EngineModuleScaled(EngineModuleReport):
    """P(X >= x sqrt(n)) along the n grid against exp(-x^2 (d-2)/(2d))."""

    def __init__(self, engine: EngineBase):
        super().__init__(engine, "scaled")
        self.add_module_parameter("d", required=True)
        self.add_module_parameter("x", required=True)
        self.add_module_parameter("scaled", required=True)
        self.add_module_parameter("grid")

    def report(self, p: JobParameters) -> AsymptoticReport:
        x = p.get_x()
        assert x is not None
        return scaled_convergence_report(p.get_d(), x, p.get_grid(), p.get_workers())


class Engine(EngineBase):
    """The limit law engine."""

    def __init__(self):
        super().__init__("limit")
        self.add_module(EngineModuleLimit(self))
        self.add_module(EngineModuleScaled(self))

    def select_module(self, params: JobParameters) -> str:
        return "scaled" if params.is_scaled() else "limit"
