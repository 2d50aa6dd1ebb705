"""Command line argument handling package."""

from chemdecarb.ui.cli.args.parser import ArgumentParser
from chemdecarb.ui.cli.args.options import CLIArgs, ReportArgs, RunArgs, SynthArgs

__all__ = ["ArgumentParser", "CLIArgs", "ReportArgs", "RunArgs", "SynthArgs"]
