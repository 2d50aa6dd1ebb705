"""Long-format table writers with a units header line."""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from pathlib import Path
from typing import Any

import pandas as pd

from chemdecarb.core.filesystem import ensure_parent_directory

UNITS_PREFIX = "# units: "


def write_table(path: Path, frame: pd.DataFrame, units: Mapping[str, str]) -> Path:
    """Write ``frame`` as CSV preceded by a ``# units:`` comment line.

    Every column must carry a unit; dimensionless keys use ``"-"``.
    """

    missing = [column for column in frame.columns if column not in units]
    if missing:
        raise ValueError(f"No unit declared for column(s): {', '.join(map(str, missing))}")

    _ = ensure_parent_directory(path)
    header = UNITS_PREFIX + ", ".join(f"{column}={units[column]}" for column in frame.columns)
    with path.open("w", encoding="utf-8", newline="") as handle:
        _ = handle.write(header + "\n")
        frame.to_csv(handle, index=False, lineterminator="\n")
    return path


def read_units(path: Path) -> dict[str, str]:
    """Parse the units header written by ``write_table``."""

    with path.open("r", encoding="utf-8") as handle:
        first = handle.readline().rstrip("\n")
    if not first.startswith(UNITS_PREFIX):
        return {}
    pairs = (item.split("=", 1) for item in first[len(UNITS_PREFIX) :].split(", ") if "=" in item)
    return {key: value for key, value in pairs}


def read_table(path: Path, **kwargs: Any) -> pd.DataFrame:
    """Read a table written by ``write_table``, skipping the units line."""

    return pd.read_csv(path, skiprows=_units_rows(path), **kwargs)


def _units_rows(path: Path) -> int:
    with path.open("r", encoding="utf-8") as handle:
        return 1 if handle.readline().startswith(UNITS_PREFIX) else 0


def write_json_lines(path: Path, records: Iterable[Mapping[str, Any]]) -> Path:
    """Write one sorted-key JSON document per line."""

    _ = ensure_parent_directory(path)
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        for record in records:
            _ = handle.write(json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n")
    return path


def read_json_lines(path: Path) -> list[dict[str, Any]]:
    """Read a JSON-lines file."""

    with path.open("r", encoding="utf-8") as handle:
        return [json.loads(line) for line in handle if line.strip()]


__all__ = ["read_json_lines", "read_table", "read_units", "write_json_lines", "write_table"]
