"""Rich rendering of command outcomes."""

from __future__ import annotations

from typing import final

from rich.console import Console
from rich.table import Table

from chemdecarb.application.services.report_service import COMPLETION_ROW, TOTAL_ROW, RunReport
from chemdecarb.application.services.run_service import RunResult
from chemdecarb.application.services.synth_service import SynthResult
from chemdecarb.core.vocabulary import HORIZON
from chemdecarb.domain.scheduler.models import UNFINISHED
from chemdecarb.ui.cli.display.progress import handler_console


def _gt(value: float) -> str:
    return f"{value / 1e9:,.2f}"


@final
class SummaryDisplay:
    """Print synth, run and report summaries."""

    def __init__(self, console: Console | None = None) -> None:
        self.console: Console = console or handler_console() or Console()

    def show_synth(self, result: SynthResult, *, quiet: bool = False) -> None:
        if quiet:
            return
        self.console.print("\n[bold]Synthesis Summary:[/bold]")
        self.console.print(f"Assets: {result.asset_count}")
        self.console.print(f"Facilities: {result.facility_count}")
        self.console.print(f"Seed: {result.seed}")
        self.console.print(f"[green]Wrote {result.assets_path}[/green]")

    def show_run(self, result: RunResult, *, quiet: bool = False) -> None:
        if quiet:
            return
        table = Table(title="Run Summary", title_justify="left")
        table.add_column("Scenario")
        table.add_column("Projects", justify="right")
        table.add_column("Capex 2024-2080 (B$)", justify="right")
        table.add_column("Unfinished cells", justify="right")
        for run in result.runs:
            unfinished = sum(1 for schedule in run.result.schedules if schedule.completion_label == UNFINISHED)
            style = "yellow" if unfinished else "green"
            table.add_row(
                run.params.name,
                str(len(run.result.projects)),
                f"{run.result.total_capex() / 1e9:,.1f}",
                f"[{style}]{unfinished}[/{style}]",
            )
        self.console.print(table)
        self.console.print(f"[green]Outputs in {result.out_dir}[/green]")

    def show_report(self, report: RunReport, *, quiet: bool = False) -> None:
        if quiet:
            return
        matrix = report.matrix
        table = Table(title="Average annual retrofit capital (B$/y)", title_justify="left")
        table.add_column("")
        for column in matrix.columns:
            table.add_column(column.label, justify="right")
        for group in matrix.groups:
            table.add_row(group, *(f"{matrix.values[column][group]:.2f}" for column in matrix.columns))
        table.add_row(
            f"[bold]{TOTAL_ROW}[/bold]",
            *(f"[bold]{matrix.total(column):.2f}[/bold]" for column in matrix.columns),
        )
        table.add_row(COMPLETION_ROW, *(matrix.completion[column] for column in matrix.columns))
        self.console.print(table)

        capex = Table(title="Cumulative capex 2025-2080 (B$)", title_justify="left")
        for name in ("Scenario", "Region", "Group"):
            capex.add_column(name)
        capex.add_column("B$", justify="right")
        for row in report.cumulative_capex.itertuples(index=False):
            capex.add_row(str(row.scenario), str(row.region), str(row.group), _gt(float(row.cumulative_capex_usd)))
        self.console.print(capex)

        emissions = Table(title="Cumulative emissions 2025-2080 (GtCO2)", title_justify="left")
        emissions.add_column("Scenario")
        emissions.add_column("GtCO2", justify="right")
        for scenario, tonnes in report.cumulative_emissions.items():
            emissions.add_row(scenario, _gt(tonnes))
        self.console.print(emissions)

        for column, flagged in report.unabated.items():
            if flagged:
                self.console.print(f"[yellow]{column.label}: existing facilities remain unabated in {HORIZON}[/yellow]")
        for name in report.stale_outputs:
            self.console.print(f"[red]{name} differs from its manifest digest[/red]")
