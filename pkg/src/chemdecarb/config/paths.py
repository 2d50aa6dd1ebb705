"""Shared path utilities for configuration, data and log locations.

Policy (portable by default):
- Config: repository-root ``<repo_root>/config/config.toml``
- Default input data: the packaged ``chemdecarb/config/data`` directory unless
  overridden by ``CHEMDECARB_DATA_DIR``.
- Logs: ``<repo_root>/logs/chemdecarb.log``
"""

from __future__ import annotations

import os
from collections.abc import Callable, Mapping
from importlib import resources
from pathlib import Path
from typing import Final

_ENV_DATA_DIR: Final[str] = "CHEMDECARB_DATA_DIR"


def resolve_overridable_path(
    *,
    explicit_path: Path | str | None,
    env: Mapping[str, str] | None,
    env_var: str | None,
    default_factory: Callable[[], Path],
) -> Path:
    """Resolve a path honoring explicit and environment overrides."""

    if explicit_path is not None:
        return Path(explicit_path).expanduser().resolve()

    mapping = env if env is not None else os.environ
    if env_var:
        candidate = (mapping.get(env_var) or "").strip()
        if candidate:
            return Path(candidate).expanduser().resolve()

    return default_factory().expanduser().resolve()


def _detect_repo_root(start: Path | None = None) -> Path:
    """Detect the repository root by walking up parents.

    Looks for markers like ``pyproject.toml`` or ``.git``; falls back to the
    current working directory.
    """
    here = (start or Path(__file__).resolve()).parent
    for p in [here, *here.parents]:
        if (p / "pyproject.toml").exists() or (p / ".git").exists():
            return p
    return Path.cwd()


def default_config_path() -> Path:
    """Portable layout: ``<repo_root>/config/config.toml``."""

    return (_detect_repo_root() / "config" / "config.toml").resolve()


def packaged_data_dir() -> Path:
    """Directory holding the shipped JSON defaults and fixtures."""

    return Path(str(resources.files("chemdecarb.config") / "data"))


def default_data_dir(env: Mapping[str, str] | None = None) -> Path:
    """Directory that default input files are read from."""

    return resolve_overridable_path(
        explicit_path=None,
        env=env,
        env_var=_ENV_DATA_DIR,
        default_factory=packaged_data_dir,
    )


def default_data_file(name: str, env: Mapping[str, str] | None = None) -> Path:
    """Path of a named default input, e.g. ``catalog.json``."""

    return default_data_dir(env) / name


def fixture_path(name: str) -> Path:
    """Path of a shipped calibration fixture."""

    return packaged_data_dir() / "fixtures" / name


def default_log_dir() -> Path:
    """Get the default directory for log files."""

    return (_detect_repo_root() / "logs").resolve()


def default_log_file() -> Path:
    """Get the default log file path."""

    return (default_log_dir() / "chemdecarb.log").resolve()


__all__ = [
    "default_config_path",
    "default_data_dir",
    "default_data_file",
    "default_log_dir",
    "default_log_file",
    "fixture_path",
    "packaged_data_dir",
    "resolve_overridable_path",
]
