from __future__ import annotations

from ..utils.helpers import ParameterError
from .parsing import parse_count, parse_grid, parse_range


def _range_error(value) -> str:
    try:
        items = parse_range(value)
    except ParameterError as exc:
        return str(exc)
    if items and isinstance(items[0], list):
        return f"'{value}' holds several groups"
    for item in items:
        try:
            count = parse_count(str(item))
        except ParameterError:
            return f"{item} is not a positive integer"
        if count < 1:
            return f"{item} is not a positive integer"
    return ""


def _count_error(value) -> str:
    try:
        if parse_count(value) < 1:
            return f"{value} must be >= 1"
    except ParameterError as exc:
        return str(exc)
    return ""


def _float_error(value) -> str:
    try:
        float(value)
    except ValueError:
        return f"{value} is not a numeric value"
    return ""


def _flag_error(config, section_name, directive) -> str:
    try:
        config.get_config().getboolean(section_name, directive)
    except ValueError:
        return f"{config.get_directive(section_name, directive)} is not a boolean"
    return ""


def validate_engine(config, section_name, value) -> str:
    """Validate the engine syntax."""
    try:
        engine = config.load_engine(value)
    except ModuleNotFoundError:
        return f'Unknown "{value}" engine'
    assert engine.get_name() == value
    return ""


def validate_n(config, section_name, value) -> str:
    """Validate the vertex count range syntax."""
    return _range_error(value)


def validate_d(config, section_name, value) -> str:
    """Validate the degree range syntax."""
    return _range_error(value)


def validate_k(config, section_name, value) -> str:
    return _count_error(value)


def validate_k_max(config, section_name, value) -> str:
    return _count_error(value)


def validate_mode(config, section_name, value) -> str:
    """Validate the tail mode syntax."""
    if value not in ["exact", "log"]:
        return f"{value} is not a valid mode"
    return ""


def validate_rho(config, section_name, value) -> str:
    return _float_error(value)


def validate_x(config, section_name, value) -> str:
    return _float_error(value)


def validate_scaled(config, section_name, value) -> str:
    return _flag_error(config, section_name, "scaled")


def validate_grid(config, section_name, value) -> str:
    """Validate the n grid syntax, e.g. 1e3,1e4,1e5."""
    try:
        grid = parse_grid(value)
    except ParameterError as exc:
        return str(exc)
    if not grid:
        return "empty grid"
    return ""


def validate_trials(config, section_name, value) -> str:
    return _count_error(value)


def validate_seed(config, section_name, value) -> str:
    """Validate the seed syntax, decimal or 0x prefixed."""
    try:
        seed = int(value, 0)
    except ValueError:
        return f"{value} is not an integer seed"
    if seed < 0:
        return f"{value} must be >= 0"
    return ""


def validate_radius(config, section_name, value) -> str:
    return _flag_error(config, section_name, "radius")


def validate_root(config, section_name, value) -> str:
    if not value.isnumeric():
        return f"{value} is not a vertex index"
    return ""


def validate_format(config, section_name, value) -> str:
    """Validate the output format."""
    if value not in ["csv", "json"]:
        return f"{value} is not a valid format"
    return ""
