from __future__ import annotations

from typing import Any

from ..utils import helpers as h
from .engine import EngineBase, EngineModuleBase
from .parameters import JobParameters
from .results import JobResult


class Job:
    """Class to define a job: one engine module run on one parameter set."""

    def __init__(self, job_number: int, engine: EngineBase, parameters: JobParameters):
        self.job_number = job_number
        self.engine = engine
        self.parameters = parameters

    def get_engine(self) -> EngineBase:
        return self.engine

    def get_enginemodule(self) -> EngineModuleBase:
        name = self.engine.select_module(self.parameters)
        module = self.engine.get_module(name)
        assert module is not None, f"{self.engine.get_name()} has no {name} module"
        return module

    def get_parameters(self) -> JobParameters:
        return self.parameters

    def get_job_number(self) -> int:
        return self.job_number

    def format_results(self) -> dict[str, Any]:
        """Job description heading every result summary."""
        return {
            "job_name": self.parameters.get_name(),
            "job_number": self.get_job_number(),
            "engine": self.engine.get_name(),
            "engine_module": self.get_enginemodule().get_name(),
            "seed": self.parameters.get_seed(),
        }

    def check_parameters(self) -> str:
        """Empty string if the parameters fit the engine module, else an error."""
        return self.get_enginemodule().validate_module_parameters(self.parameters)

    def validate_parameters(self):
        error = self.check_parameters()
        if error:
            e = self.get_enginemodule()
            h.fatal(
                f"Unsupported parameter for {self.engine.get_name()}/"
                f"{e.get_name()}: {error}"
            )

    def run(self) -> JobResult:
        e = self.get_enginemodule()
        p = self.get_parameters()
        p.set_result_format(self.format_results())
        return e.run(p)
