"""Run command implementation for the CLI."""

from __future__ import annotations

from typing import final

from chemdecarb.application.services.run_service import RunRequest, RunResult, RunService
from chemdecarb.ui.cli.args.options import RunArgs
from chemdecarb.ui.cli.display.progress import ProgressDisplay
from chemdecarb.ui.cli.display.summary import SummaryDisplay


@final
class RunCommand:
    """Command planning scenarios into a run directory."""

    def __init__(self, args: RunArgs) -> None:
        self.args = args
        self.service = RunService()
        self.progress_display = ProgressDisplay(quiet=args.quiet)
        self.display = SummaryDisplay()

    def execute(self) -> RunResult:
        request = RunRequest(
            out_dir=self.args.out_dir,
            assets_path=self.args.assets_path,
            scenarios=self.args.scenarios,
            catalog_path=self.args.catalog_path,
            finance_path=self.args.finance_path,
            prices_path=self.args.prices_path,
            growth_path=self.args.growth_path,
            seed=self.args.seed,
            frozen_reference=self.args.frozen_reference,
        )
        with self.progress_display.track() as progress:
            result = self.service.run(request, progress)
        self.display.show_run(result, quiet=self.args.quiet)
        return result
