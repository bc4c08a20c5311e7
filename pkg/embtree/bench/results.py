from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class JobResult:
    """Rows of one job under a fixed header, plus a summary record."""

    engine: str
    module: str
    header: list[str]
    rows: list[dict[str, Any]] = field(default_factory=list)
    summary: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        for row in self.rows:
            assert list(row) == self.header, f"row {row} does not match {self.header}"

    def to_dict(self) -> dict[str, Any]:
        return {
            "engine": self.engine,
            "engine_module": self.module,
            "summary": self.summary,
            "rows": self.rows,
        }
