"""Command execution package for CLI."""

from chemdecarb.ui.cli.commands.report import ReportCommand
from chemdecarb.ui.cli.commands.run import RunCommand
from chemdecarb.ui.cli.commands.synth import SynthCommand

__all__ = [
    "ReportCommand",
    "RunCommand",
    "SynthCommand",
]
