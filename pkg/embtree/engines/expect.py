from __future__ import annotations

import math
from typing import Optional

from ..asymptotics.limits import expectation_constant, expectation_report
from ..bench.engine import EngineBase, EngineModuleBase
from ..bench.parameters import JobParameters
from ..bench.results import JobResult
from ..exact.hypergeometric import hyp2f1_float, hyp2f1_terminating
from ..exact.tail import expectation, expectation_log
from ..utils.helpers import EmbtreeError

EXACT_HEADER = [
    "n",
    "d",
    "e_num",
    "e_den",
    "expectation",
    "hyp2f1_num",
    "hyp2f1_den",
    "hyp2f1",
    "hyp2f1_float",
    "equal",
    "e_over_sqrt_n",
    "constant",
]
LOG_HEADER = ["n", "d", "expectation", "e_over_sqrt_n", "constant", "relative_gap"]
GRID_HEADER = ["n", "value", "predicted", "gap"]


def constant_or_none(d: int) -> Optional[float]:
    """c(d), which only exists for d >= 3."""
    return expectation_constant(d) if d >= 3 else None


class EngineModuleExact(EngineModuleBase):
    """E(X) as an exact rational, checked against the terminating 2F1 series."""

    def __init__(self, engine: EngineBase):
        super().__init__(engine, "exact")
        self.add_module_parameter("n", required=True)
        self.add_module_parameter("d", required=True)
        self.add_module_parameter("mode")

    def run(self, p: JobParameters) -> JobResult:
        params = p.get_params()
        mean = expectation(params)
        series = hyp2f1_terminating(params)
        if mean != series:
            raise EmbtreeError(f"E(X)={mean} differs from 2F1={series} for {params}")
        row = {
            "n": params.n,
            "d": params.d,
            "e_num": mean.numerator,
            "e_den": mean.denominator,
            "expectation": mean,
            "hyp2f1_num": series.numerator,
            "hyp2f1_den": series.denominator,
            "hyp2f1": series,
            "hyp2f1_float": hyp2f1_float(params),
            "equal": mean == series,
            "e_over_sqrt_n": float(mean) / math.sqrt(params.n),
            "constant": constant_or_none(params.d),
        }
        return self.make_result(p, EXACT_HEADER, [row], {"n": params.n, "d": params.d})


class EngineModuleLog(EngineModuleBase):
    """E(X) through the log-space tail, for any n."""

    def __init__(self, engine: EngineBase):
        super().__init__(engine, "log")
        self.add_module_parameter("n", required=True)
        self.add_module_parameter("d", required=True)
        self.add_module_parameter("mode")

    def run(self, p: JobParameters) -> JobResult:
        params = p.get_params()
        mean = expectation_log(params)
        ratio = mean / math.sqrt(params.n)
        constant = constant_or_none(params.d)
        row = {
            "n": params.n,
            "d": params.d,
            "expectation": mean,
            "e_over_sqrt_n": ratio,
            "constant": constant,
            "relative_gap": None if constant is None else abs(ratio / constant - 1),
        }
        return self.make_result(p, LOG_HEADER, [row], {"n": params.n, "d": params.d})


class EngineModuleGrid(EngineModuleBase):
    """E(X)/sqrt(n) along an n grid against c(d)."""

    def __init__(self, engine: EngineBase):
        super().__init__(engine, "grid")
        self.add_module_parameter("d", required=True)
        self.add_module_parameter("grid", required=True)
        self.add_module_parameter("mode")

    def run(self, p: JobParameters) -> JobResult:
        report = expectation_report(p.get_d(), p.get_grid(), p.get_workers())
        summary = {
            "kind": report.kind,
            "d": p.get_d(),
            "predicted": report.predicted,
            "final_gap": report.final_gap,
        }
        return self.make_result(p, GRID_HEADER, report.rows(), summary)


class Engine(EngineBase):
    """The expectation engine."""

    def __init__(self):
        super().__init__("expect")
        self.add_module(EngineModuleExact(self))
        self.add_module(EngineModuleLog(self))
        self.add_module(EngineModuleGrid(self))

    def select_module(self, params: JobParameters) -> str:
        if params.get_value("grid") is not None:
            return "grid"
        return str(params.get_mode())
