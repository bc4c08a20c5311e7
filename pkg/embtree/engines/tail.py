from __future__ import annotations

import math
from fractions import Fraction

from ..asymptotics.stirling import stirling_tail_approx
from ..bench.engine import EngineBase, EngineModuleBase
from ..bench.parameters import JobParameters
from ..bench.results import JobResult
from ..exact.params import Params
from ..exact.tail import TailMode, tail_table

EXACT_HEADER = ["k", "p_exact_num", "p_exact_den", "p_float", "p_stirling"]
LOG_HEADER = ["k", "log_p", "p_float", "p_stirling"]


def requested_ks(p: JobParameters, params: Params) -> list[int]:
    """A single k, or 1..k_max (default n)."""
    k = p.get_k()
    if k is not None:
        return [params.check_k(k)]
    k_max = p.get_k_max()
    last = params.n if k_max is None else params.check_k(k_max)
    return list(range(1, last + 1))


class EngineModuleTail(EngineModuleBase):
    """P(X >= k) rows in one tail mode."""

    def __init__(self, engine: EngineBase, mode: TailMode):
        super().__init__(engine, str(mode))
        self.mode = mode
        self.add_module_parameter("n", required=True)
        self.add_module_parameter("d", required=True)
        self.add_module_parameter("k")
        self.add_module_parameter("k_max")
        self.add_module_parameter("mode")

    def validate_module_parameters(self, params: JobParameters) -> str:
        if params.get_k() is not None and params.get_k_max() is not None:
            return "k and k_max are mutually exclusive"
        return super().validate_module_parameters(params)

    def run(self, p: JobParameters) -> JobResult:
        params = p.get_params()
        ks = requested_ks(p, params)
        table = tail_table(params, self.mode, k_max=ks[-1])
        rows = []
        for k in ks:
            value = table.value(k)
            stirling = stirling_tail_approx(params, k)
            if isinstance(value, Fraction):
                rows.append(
                    {
                        "k": k,
                        "p_exact_num": value.numerator,
                        "p_exact_den": value.denominator,
                        "p_float": value,
                        "p_stirling": stirling,
                    }
                )
            else:
                rows.append(
                    {
                        "k": k,
                        "log_p": value,
                        "p_float": math.exp(value),
                        "p_stirling": stirling,
                    }
                )
        header = EXACT_HEADER if self.mode is TailMode.EXACT else LOG_HEADER
        summary = {"n": params.n, "d": params.d, "mode": str(self.mode)}
        return self.make_result(p, header, rows, summary)


class Engine(EngineBase):
    """The tail table engine."""

    def __init__(self):
        super().__init__("tail")
        for mode in TailMode:
            self.add_module(EngineModuleTail(self, mode))

    def select_module(self, params: JobParameters) -> str:
        return str(params.get_mode())
