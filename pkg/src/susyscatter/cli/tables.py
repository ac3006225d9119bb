"""Plain-file result tables.

CSV: one header line, '.' decimals, 17 significant digits so every double round-trips.
JSON: an object mapping column names to lists, NaN written as null.
"""

import csv
import io
import json
import math
import sys
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Any, Literal

import numpy as np
from loguru import logger

from susyscatter.errors import OutputError, ParameterError

FLOAT_FORMAT = "%.16e"


def _format_cell(value: Any) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, bool | np.bool_):
        return "true" if value else "false"
    value = float(value)
    if math.isnan(value):
        return "nan"
    return FLOAT_FORMAT % value


def _json_cell(value: Any) -> Any:
    if isinstance(value, str):
        return value
    if isinstance(value, bool | np.bool_):
        return bool(value)
    value = float(value)
    return None if math.isnan(value) else value


def _column_lengths(columns: Mapping[str, Sequence]) -> int:
    lengths = {name: len(values) for name, values in columns.items()}
    if len(set(lengths.values())) > 1:
        raise ParameterError(f"table columns differ in length: {lengths}")
    return next(iter(lengths.values()), 0)


def render_table(columns: Mapping[str, Sequence], fmt: Literal["csv", "json"] = "csv") -> str:
    """Render named, equally long columns as CSV or JSON text."""
    n_rows = _column_lengths(columns)
    if fmt == "json":
        payload = {name: [_json_cell(v) for v in values] for name, values in columns.items()}
        return json.dumps(payload, indent=2) + "\n"

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns.keys())
    for i in range(n_rows):
        writer.writerow(_format_cell(values[i]) for values in columns.values())
    return buffer.getvalue()


def write_table(columns: Mapping[str, Sequence], path: Path | None, fmt: Literal["csv", "json"] = "csv") -> None:
    """Write a table to ``path`` or to stdout.

    Raises:
        OutputError: If the file cannot be written
    """
    write_text(render_table(columns, fmt), path)
    if path is not None:
        logger.info(f"✅ Wrote {_column_lengths(columns)} rows to {path}")


def read_csv_table(path: Path) -> dict[str, np.ndarray]:
    """Read a table written by :func:`write_table` back into float columns."""
    try:
        with Path(path).open(newline="") as handle:
            rows = list(csv.reader(handle))
    except OSError as e:
        raise OutputError(f"cannot read table {path}: {e}") from e
    header, body = rows[0], rows[1:]
    converted = [[1.0 if cell == "true" else 0.0 if cell == "false" else float(cell) for cell in row] for row in body]
    data = np.array(converted, dtype=float).reshape(len(body), len(header))
    return {name: data[:, i] for i, name in enumerate(header)}


def write_text(text: str, path: Path | None) -> None:
    """Write rendered output to ``path``, or to stdout when ``path`` is None.

    Raises:
        OutputError: If the file cannot be written
    """
    if path is None:
        sys.stdout.write(text)
        return
    try:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    except OSError as e:
        logger.error(f"Failed to write {path}: {e}")
        raise OutputError(f"cannot write to {path}: {e}") from e
