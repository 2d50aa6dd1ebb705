"""Display management for CLI interface."""

from chemdecarb.ui.cli.display.progress import ProgressDisplay
from chemdecarb.ui.cli.display.summary import SummaryDisplay

__all__ = ["ProgressDisplay", "SummaryDisplay"]
