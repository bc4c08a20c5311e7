from __future__ import annotations

import abc
from typing import Any, Optional

from .parameters import JobParameters
from .results import JobResult


class EngineModuleBase(abc.ABC):
    def __init__(self, engine: "EngineBase", name: str):
        self.name = name
        self.engine = engine
        self.module_parameters: list[str] = []
        self.required_parameters: list[str] = []

    def get_name(self) -> str:
        return self.name

    def add_module_parameter(self, name: str, required: bool = False):
        if name not in self.get_module_parameters():
            self.module_parameters.append(name)
        if required and name not in self.required_parameters:
            self.required_parameters.append(name)

    def get_module_parameters(self) -> list[str]:
        return self.module_parameters

    def validate_module_parameters(self, params: JobParameters) -> str:
        """Return an error message when params do not fit this module."""
        for name in self.required_parameters:
            if params.get_value(name) is None:
                return f"{name} is required"
        for name in params.get_set_parameters():
            if name not in self.module_parameters:
                return f"{name} is not used by {self.engine.get_name()}/{self.name}"
        return ""

    def make_result(
        self,
        params: JobParameters,
        header: list[str],
        rows: list[dict[str, Any]],
        summary: dict[str, Any],
    ) -> JobResult:
        """A JobResult whose summary starts with the job description."""
        return JobResult(
            self.engine.get_name(),
            self.name,
            header,
            rows,
            params.get_result_format() | summary,
        )

    @abc.abstractmethod
    def run(self, params: JobParameters) -> JobResult:
        pass


class EngineBase:
    def __init__(self, name: str):
        self.engine_name = name
        self.modules: dict[str, EngineModuleBase] = {}

    def get_name(self) -> str:
        return self.engine_name

    def add_module(self, engine_module: EngineModuleBase):
        self.modules[engine_module.get_name()] = engine_module

    def get_module(self, module_name: str) -> Optional[EngineModuleBase]:
        return self.modules.get(module_name)

    def select_module(self, params: JobParameters) -> str:
        """Name of the module serving params; engines with variants override it."""
        return self.get_name()
