from __future__ import annotations

import configparser
import importlib
import os
from typing import Any, Optional

from ..bench.engine import EngineBase
from ..bench.parameters import JOB_KEYWORDS
from ..utils import helpers as h
from . import config_syntax
from .parsing import parse_count, parse_grid, parse_range

# every job gathers its results in results.json unless it asks for a csv
DEFAULT_FORMAT = "json"


def load_engine(engine_name: str) -> EngineBase:
    """Instantiate embtree/engines/<engine_name>.py's Engine."""
    module = importlib.import_module(f"..engines.{engine_name}", package=__package__)
    return module.Engine()


class Config:
    """A campaign file: one job per section, [global] merged into each."""

    def __init__(self, config_file: str):
        self.config_file = config_file
        if not os.path.isfile(config_file):
            h.fatal(f"Campaign file '{config_file}' does not exist")
        self.config = configparser.RawConfigParser(
            default_section="global", defaults={"format": DEFAULT_FORMAT}
        )
        self.config.read(config_file)

    def to_dict(self) -> dict[str, dict[str, Any]]:
        return {
            section: dict(self.config.items(section))
            for section in self.get_sections()
        }

    def get_sections(self) -> list[str]:
        return self.config.sections()

    def get_section(self, section_name) -> configparser.SectionProxy:
        return self.config[section_name]

    def get_valid_keywords(self) -> list[str]:
        return ["engine", *JOB_KEYWORDS, "format"]

    def get_directive(self, section_name, directive) -> str:
        """A directive of a section, lowercased."""
        return self.get_section(section_name)[directive].lower()

    def get_optional(self, section_name, directive) -> Optional[str]:
        """A directive, or None when neither the section nor [global] sets it."""
        try:
            return self.get_directive(section_name, directive)
        except KeyError:
            return None

    def get_engine(self, section_name) -> str:
        return self.get_directive(section_name, "engine")

    def load_engine(self, engine_name) -> EngineBase:
        return load_engine(engine_name)

    def get_sizes(self, section_name, directive) -> list[Optional[int]]:
        """Every n (or d) of a section, [None] when unset."""
        value = self.get_optional(section_name, directive)
        if value is None:
            return [None]
        return [parse_count(str(v)) for v in parse_range(value)]

    def get_int(self, section_name, directive) -> Optional[int]:
        value = self.get_optional(section_name, directive)
        return None if value is None else parse_count(value)

    def get_float(self, section_name, directive) -> Optional[float]:
        value = self.get_optional(section_name, directive)
        return None if value is None else float(value)

    def get_flag(self, section_name, directive) -> Optional[bool]:
        if self.get_optional(section_name, directive) is None:
            return None
        return self.config.getboolean(section_name, directive)

    def get_mode(self, section_name) -> Optional[str]:
        return self.get_optional(section_name, "mode")

    def get_grid(self, section_name) -> Optional[list[int]]:
        value = self.get_optional(section_name, "grid")
        return None if value is None else parse_grid(value)

    def get_seed(self, section_name) -> Optional[int]:
        """Decimal or 0x prefixed."""
        value = self.get_optional(section_name, "seed")
        return None if value is None else int(value, 0)

    def get_format(self, section_name) -> str:
        return self.get_directive(section_name, "format")

    def is_valid_keyword(self, keyword) -> bool:
        return keyword in self.get_valid_keywords()

    def validate_sections(self):
        """Check every job of the campaign, a syntax error is fatal."""
        if not self.get_sections():
            h.fatal(f"{self.config_file}: no job defined")
        for section_name in self.get_sections():
            self.validate_section(section_name)

    def validate_section(self, section_name):
        if "engine" not in self.get_section(section_name):
            h.fatal(f"job {section_name}: missing engine keyword")
        for directive in self.get_section(section_name):
            if not self.is_valid_keyword(directive):
                h.fatal(f"job {section_name}: invalid keyword {directive}")
            # config_syntax.validate_<directive> returns an error message or ""
            validate = getattr(config_syntax, f"validate_{directive}")
            message = validate(
                self, section_name, self.get_directive(section_name, directive)
            )
            if message:
                h.fatal(f"job {section_name}: keyword {directive}: {message}")

    def get_config(self) -> configparser.RawConfigParser:
        return self.config
