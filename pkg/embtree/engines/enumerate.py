from __future__ import annotations

from ..bench.engine import EngineBase, EngineModuleBase
from ..bench.parameters import JobParameters
from ..bench.results import JobResult
from ..oracle.enumerate import enumerate_distribution, enumerate_radius_distribution

SIZE_HEADER = ["k", "p_num", "p_den", "p_float", "count", "tail_num", "tail_den"]
RADIUS_HEADER = ["r", "p_num", "p_den", "p_float"]


class EngineModuleEnumerate(EngineModuleBase):
    def __init__(self, engine: EngineBase, name: str):
        super().__init__(engine, name)
        self.add_module_parameter("n", required=True)
        self.add_module_parameter("d", required=True)
        self.add_module_parameter("root")


class EngineModuleSize(EngineModuleEnumerate):
    """Exact law of X over every configuration."""

    def __init__(self, engine: EngineBase):
        super().__init__(engine, "size")

    def run(self, p: JobParameters) -> JobResult:
        params = p.get_params()
        dist = enumerate_distribution(params, p.get_root(), p.get_workers())
        rows = [
            {
                "k": k,
                "p_num": prob.numerator,
                "p_den": prob.denominator,
                "p_float": prob,
                "count": count,
                "tail_num": tail.numerator,
                "tail_den": tail.denominator,
            }
            for k, (prob, count, tail) in enumerate(
                zip(dist.probabilities, dist.counts(), dist.tail()), start=1
            )
        ]
        summary = {
            "n": params.n,
            "d": params.d,
            "root": p.get_root(),
            "matchings": dist.matchings,
            "mean": dist.mean(),
        }
        return self.make_result(p, SIZE_HEADER, rows, summary)


class EngineModuleRadius(EngineModuleEnumerate):
    """Exact law of tree_ball_radius over every configuration."""

    def __init__(self, engine: EngineBase):
        super().__init__(engine, "radius")
        self.add_module_parameter("radius", required=True)

    def run(self, p: JobParameters) -> JobResult:
        params = p.get_params()
        law = enumerate_radius_distribution(params, p.get_root(), p.get_workers())
        rows = [
            {"r": r, "p_num": q.numerator, "p_den": q.denominator, "p_float": q}
            for r, q in law.items()
        ]
        summary = {"n": params.n, "d": params.d, "root": p.get_root()}
        return self.make_result(p, RADIUS_HEADER, rows, summary)


class Engine(EngineBase):
    """The exhaustive enumeration engine."""

    def __init__(self):
        super().__init__("enumerate")
        self.add_module(EngineModuleSize(self))
        self.add_module(EngineModuleRadius(self))

    def select_module(self, params: JobParameters) -> str:
        return "radius" if params.wants_radius() else "size"
