"""Command line argument options."""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal, final


@final
@dataclass(slots=True)
class SynthArgs:
    """Command line arguments for the ``synth`` subcommand."""

    command: Literal["synth"]
    out_dir: Path
    spec_path: Path | None
    seed: int | None
    verbose: bool
    quiet: bool


@final
@dataclass(slots=True)
class RunArgs:
    """Command line arguments for the ``run`` subcommand."""

    command: Literal["run"]
    out_dir: Path
    assets_path: Path | None
    scenarios: list[str] = field(default_factory=lambda: ["SU"])
    catalog_path: Path | None = None
    finance_path: Path | None = None
    prices_path: Path | None = None
    growth_path: Path | None = None
    seed: int | None = None
    frozen_reference: bool = False
    verbose: bool = False
    quiet: bool = False


@final
@dataclass(slots=True)
class ReportArgs:
    """Command line arguments for the ``report`` subcommand."""

    command: Literal["report"]
    run_dir: Path
    csv_path: Path | None
    verbose: bool
    quiet: bool


CLIArgs = SynthArgs | RunArgs | ReportArgs

__all__ = ["CLIArgs", "ReportArgs", "RunArgs", "SynthArgs"]
