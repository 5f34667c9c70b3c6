"""CSV and JSON writers for sampled curves.

Floats are printed with a fixed number of significant digits; at 17 digits
the shortest round-trip representation is used, so reloading is lossless.
Re-emitting a parsed file at the same precision reproduces it byte for byte.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Sequence

from . import __version__


def format_float(x, precision: int = 17) -> str:
    if isinstance(x, (int,)) and not isinstance(x, bool):
        return str(x)
    x = float(x)
    if precision >= 17:
        return repr(x)
    return f"{x:.{precision}g}"


def _round(x, precision: int):
    if isinstance(x, int) and not isinstance(x, bool):
        return x
    return float(format_float(x, precision))


def to_csv(columns: Sequence[str], rows, precision: int = 17) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([format_float(v, precision) for v in row])
    return buf.getvalue()


def _parse(v: str):
    # "-0" must stay a float or its sign is lost
    if v.lstrip("-").isdigit() and v != "-0":
        return int(v)
    return float(v)


def read_csv(text: str) -> tuple[list, list]:
    """Parse text written by :func:`to_csv`; integer columns stay integers."""
    reader = csv.reader(io.StringIO(text))
    columns = next(reader)
    rows = []
    for raw in reader:
        rows.append([_parse(v) for v in raw])
    return columns, rows


def to_json(columns: Sequence[str], rows, meta: dict, precision: int = 17) -> str:
    doc = {
        "meta": {**meta, "tool": "pgcurve", "version": __version__},
        "samples": [
            {c: _round(v, precision) for c, v in zip(columns, row)} for row in rows
        ],
    }
    return json.dumps(doc, indent=1) + "\n"


def render(columns, rows, fmt: str = "csv", precision: int = 17, meta: dict | None = None) -> str:
    if fmt == "csv":
        return to_csv(columns, rows, precision)
    if fmt == "json":
        return to_json(columns, rows, meta or {}, precision)
    raise ValueError(f"unknown format {fmt!r}")
