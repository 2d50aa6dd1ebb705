"""CLI package for chemdecarb."""

from chemdecarb.ui.cli.cli import CommandProcessor, main

__all__ = ["CommandProcessor", "main"]
