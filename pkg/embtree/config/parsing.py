from __future__ import annotations

from typing import Any

from ..utils.helpers import ParameterError


def parse_count(text: str) -> int:
    """A positive count written as an integer or in scientific notation (1e6)."""
    text = text.strip()
    if text.isnumeric():
        return int(text)
    try:
        value = float(text)
    except ValueError:
        raise ParameterError(f"'{text}' is not a number")
    if not value.is_integer() or value < 0:
        raise ParameterError(f"'{text}' is not a whole number")
    return int(value)


def parse_grid(text: str) -> list[int]:
    """A comma separated list of sizes, like 1e3,1e4,1e5."""
    return [parse_count(item) for item in text.split(",") if item.strip()]


def parse_range(input: str) -> list[Any]:
    """A function to parse the range syntax from a configuration directive."""
    result: list[Any] = []
    # group1 group2...
    groups_count = len(input.split(" "))

    for group in input.split(" "):
        # syntax: <x>,<y>
        current_group: list[Any] = []
        for item in group.split(","):
            # syntax: <x>-<y>
            if "-" in item:
                ranges = item.split("-")
                if len(ranges) != 2:
                    raise ParameterError(f"Invalid range {item} in '{input}'")
                if not ranges[0].isnumeric() or not ranges[1].isnumeric():
                    raise ParameterError(f"Non-numeric range {ranges} in '{input}'")
                for number in range(int(ranges[0]), int(ranges[1]) + 1):
                    current_group.append(number)
            else:
                # syntax: <x>
                item_group: str | int = item
                if item.isnumeric():
                    item_group = int(item)
                current_group.append(item_group)
        if groups_count > 1:
            result.append(current_group)
        else:
            result = current_group
    return result
