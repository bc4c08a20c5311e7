"""CSV and JSON renderings of job results.

Both renderings only depend on the result content, so identical jobs give
byte-identical files. Exact rationals are rendered as decimals with
SIGNIFICANT_DIGITS significant digits next to their numerator and denominator.
"""

from __future__ import annotations

import csv
import decimal
import io
import json
import pathlib
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

import numpy as np

from .results import JobResult

SIGNIFICANT_DIGITS = 15
FORMATS = ["csv", "json"]


def decimal_string(value: Fraction) -> str:
    """value at SIGNIFICANT_DIGITS significant digits, without going through float."""
    with decimal.localcontext() as ctx:
        ctx.prec = SIGNIFICANT_DIGITS
        quotient = decimal.Decimal(value.numerator) / decimal.Decimal(value.denominator)
        return format(quotient, f".{SIGNIFICANT_DIGITS}g")


def render_value(value: Any) -> str:
    """One CSV cell."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return decimal_string(value)
    if isinstance(value, (float, np.floating)):
        return format(float(value), f".{SIGNIFICANT_DIGITS}g")
    if isinstance(value, (list, tuple)):
        return ";".join(render_value(v) for v in value)
    return str(value)


class ResultJSONEncoder(json.JSONEncoder):
    def default(self, o):
        if isinstance(o, Fraction):
            return decimal_string(o)
        if isinstance(o, np.integer):
            return int(o)
        if isinstance(o, np.floating):
            return float(o)
        if isinstance(o, np.ndarray):
            return o.tolist()
        if isinstance(o, Enum):
            return str(o)
        return super().default(o)


def to_csv(result: JobResult) -> str:
    """Summary as '# key=value' comment lines, then the header and the rows."""
    out = io.StringIO()
    for key, value in result.summary.items():
        out.write(f"# {key}={render_value(value)}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(result.header)
    for row in result.rows:
        writer.writerow([render_value(row[column]) for column in result.header])
    return out.getvalue()


def to_json(document: Any) -> str:
    return json.dumps(document, cls=ResultJSONEncoder, indent=2) + "\n"


def render(result: JobResult, output_format: str) -> str:
    if output_format == "csv":
        return to_csv(result)
    if output_format == "json":
        return to_json(result.to_dict())
    raise ValueError(f"unknown output format {output_format!r}")


def write_output(text: str, path: Optional[pathlib.Path]):
    """Write text to path, or to stdout without one."""
    if path is None:
        print(text, end="")
        return
    path.write_text(text)
    print(f"Result file available at {str(path)}")
