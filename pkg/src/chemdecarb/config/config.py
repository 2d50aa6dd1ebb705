"""Configuration management for chemdecarb."""

from __future__ import annotations

import tomllib
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, ClassVar, Final

from chemdecarb.config.file_ops import write_text_file
from chemdecarb.config.paths import default_config_path, default_data_file
from chemdecarb.core.errors import InputError
from chemdecarb.infra.logger.logger import logger

DEFAULT_SEED: Final[int] = 20230101

# Config field -> packaged default file name.
INPUT_FILES: Final[dict[str, str]] = {
    "catalog_path": "catalog.json",
    "finance_path": "finance.json",
    "prices_path": "prices.json",
    "growth_path": "growth.json",
    "storage_sites_path": "storage_sites.json",
    "trajectories_path": "trajectories.json",
    "learning_path": "learning.json",
    "scenarios_path": "scenarios.json",
    "synthesis_spec_path": "world_synthesis.json",
}


def _path_field(default: Path | None = None) -> Any:
    """Create a field for Path objects converted from TOML strings."""

    return field(default=default, metadata={"path": True})


@dataclass
class Config:
    """Application configuration."""

    log_file: Path | None = _path_field()
    output_dir: Path | None = _path_field()

    # Input overrides; None means the packaged default.
    catalog_path: Path | None = _path_field()
    finance_path: Path | None = _path_field()
    prices_path: Path | None = _path_field()
    growth_path: Path | None = _path_field()
    storage_sites_path: Path | None = _path_field()
    trajectories_path: Path | None = _path_field()
    learning_path: Path | None = _path_field()
    scenarios_path: Path | None = _path_field()
    synthesis_spec_path: Path | None = _path_field()

    default_seed: int = DEFAULT_SEED
    decision_log_limit: int = 50

    _instance: ClassVar[Config | None] = None
    _loaded_from: ClassVar[Path | None] = None

    def __post_init__(self) -> None:
        for f in fields(self):
            if not f.metadata.get("path", False):
                continue
            value = getattr(self, f.name)
            if isinstance(value, str):
                setattr(self, f.name, Path(value) if value.strip() else None)
        if self.decision_log_limit < 0:
            raise InputError("decision_log_limit must be >= 0")

    def input_path(self, key: str, explicit: Path | None = None) -> Path:
        """Resolve an input file: explicit flag, then config override, then packaged default."""

        if key not in INPUT_FILES:
            raise KeyError(key)
        if explicit is not None:
            return explicit
        configured: Path | None = getattr(self, key)
        if configured is not None:
            return configured
        return default_data_file(INPUT_FILES[key])

    def save(self) -> None:
        """Save configuration to the portable config path."""

        config_dict = {
            key: (str(value) if isinstance(value, Path) else value) for key, value in asdict(self).items()
        }
        target = default_config_path()
        try:
            write_text_file(target, self._render_toml(config_dict))
            logger.info("Configuration saved to %s", target)
        except OSError as e:
            logger.error("Failed to save configuration: %s", e)
            raise

    def _render_toml(self, config: dict[str, Any]) -> str:
        """Render configuration as TOML with inline guidance."""

        lines: list[str] = ["# chemdecarb configuration file", ""]

        lines.append("# Log file path (optional)")
        lines.append('# Example: log_file = "/path/to/logs/chemdecarb.log"')
        if config["log_file"] is not None:
            lines.append(f"log_file = {self._format_toml_value(config['log_file'])}")
        lines.append("")

        lines.append("# Default output directory for runs when --out is omitted (optional)")
        if config["output_dir"] is not None:
            lines.append(f"output_dir = {self._format_toml_value(config['output_dir'])}")
        lines.append("")

        lines.append("# Input overrides (optional); unset entries use the packaged defaults")
        lines.append("# or the CHEMDECARB_DATA_DIR directory when that variable is set")
        for key in INPUT_FILES:
            if config[key] is not None:
                lines.append(f"{key} = {self._format_toml_value(config[key])}")
        lines.append("")

        lines.append("# Seed used by synthesis when neither --seed nor the spec gives one")
        lines.append(f"default_seed = {self._format_toml_value(config['default_seed'])}")
        lines.append("")

        lines.append("# Deferred candidates recorded per decision-log entry")
        lines.append(f"decision_log_limit = {self._format_toml_value(config['decision_log_limit'])}")
        lines.append("")

        return "\n".join(lines)

    def _format_toml_value(self, value: Any) -> str:
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, (str, Path)):
            return f'"{value}"'
        return str(value)

    @classmethod
    def load(cls) -> Config:
        """Load configuration, returning defaults when no file exists."""

        if cls._instance is not None:
            return cls._instance

        config_file = default_config_path()
        if not config_file.exists():
            instance = cls()
            logger.debug("No configuration at %s; using defaults", config_file)
        else:
            try:
                with config_file.open("rb") as f:
                    config_dict = tomllib.load(f)
            except tomllib.TOMLDecodeError as e:
                raise InputError(f"Configuration file {config_file} is not valid TOML: {e}") from e

            known = {f.name for f in fields(cls)}
            unknown = sorted(set(config_dict) - known)
            if unknown:
                raise InputError(f"Unknown configuration key '{unknown[0]}' in {config_file}")

            instance = cls(**config_dict)
            logger.info("Configuration loaded from %s", config_file)

        cls._instance = instance
        cls._loaded_from = config_file
        return instance

    @classmethod
    def reset(cls) -> None:
        """Forget the cached instance so the next ``load`` rereads the file."""

        cls._instance = None
        cls._loaded_from = None


__all__ = ["Config", "DEFAULT_SEED", "INPUT_FILES"]
