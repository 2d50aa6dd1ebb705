"""Report command implementation for the CLI."""

from __future__ import annotations

from typing import final

from chemdecarb.application.services.report_service import ReportService, RunReport
from chemdecarb.ui.cli.args.options import ReportArgs
from chemdecarb.ui.cli.display.summary import SummaryDisplay


@final
class ReportCommand:
    """Command summarizing a finished run directory."""

    def __init__(self, args: ReportArgs) -> None:
        self.args = args
        self.service = ReportService()
        self.display = SummaryDisplay()

    def execute(self) -> RunReport:
        report = self.service.build(self.args.run_dir)
        self.display.show_report(report, quiet=self.args.quiet)
        if self.args.csv_path is not None:
            _ = self.service.write_csv(report, self.args.csv_path)
        return report
