"""Utility helpers for configuration and data file persistence."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from chemdecarb.core.errors import InputError


def write_text_file(path: Path, content: str) -> None:
    """Persist textual content ensuring parent directories exist."""

    path.parent.mkdir(parents=True, exist_ok=True)
    _ = path.write_text(content, encoding="utf-8")


def read_json_file(path: Path, *, what: str) -> Any:
    """Read a JSON document, turning absence and syntax errors into ``InputError``.

    Args:
        path: File to read.
        what: Human-readable role of the file, used in error messages.
    """

    if not path.exists():
        raise InputError(f"{what} file not found: {path}")
    try:
        with path.open("r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what} file {path} is not valid JSON: {exc}") from exc


def write_json_file(path: Path, payload: Any) -> None:
    """Write canonical JSON (sorted keys, two-space indent, trailing newline)."""

    write_text_file(path, json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n")


def strip_comments(payload: dict[str, Any]) -> dict[str, Any]:
    """Drop ``_comment`` keys that annotate the shipped JSON defaults."""

    return {key: value for key, value in payload.items() if not key.startswith("_")}


__all__ = ["read_json_file", "strip_comments", "write_json_file", "write_text_file"]
