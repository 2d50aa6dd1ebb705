"""Tests for the synth, run and report summaries."""

from pathlib import Path

import pytest
from rich.console import Console

from chemdecarb.application.services.report_service import ReportService, RunReport
from chemdecarb.application.services.run_service import RunResult
from chemdecarb.application.services.synth_service import SynthResult
from chemdecarb.ui.cli.display.summary import SummaryDisplay


@pytest.fixture
def console() -> Console:
    return Console(record=True, width=200, color_system=None)


@pytest.fixture
def eu_report(eu_run: RunResult) -> RunReport:
    return ReportService().build(eu_run.out_dir)


def test_show_synth(console: Console) -> None:
    result = SynthResult(
        assets_path=Path("out/assets.csv"),
        manifest_path=Path("out/manifest.json"),
        asset_count=705,
        facility_count=455,
        seed=42,
    )

    SummaryDisplay(console).show_synth(result)

    text = console.export_text()
    assert "Assets: 705" in text
    assert "Facilities: 455" in text
    assert "Seed: 42" in text


def test_show_run_lists_each_scenario(console: Console, eu_run: RunResult) -> None:
    SummaryDisplay(console).show_run(eu_run)

    text = console.export_text()
    assert "Run Summary" in text
    assert "SU" in text
    assert "GA" in text
    assert f"Outputs in {eu_run.out_dir}" in text


def test_show_report(console: Console, eu_report: RunReport) -> None:
    """The capital matrix, capex and emissions tables are all printed."""

    SummaryDisplay(console).show_report(eu_report)

    text = console.export_text()
    assert "Average annual retrofit capital" in text
    assert "Europe/SU" in text
    assert "Cumulative capex 2025-2080" in text
    assert "REF" in text


def test_quiet_prints_nothing(console: Console, eu_run: RunResult, eu_report: RunReport) -> None:
    display = SummaryDisplay(console)

    display.show_run(eu_run, quiet=True)
    display.show_report(eu_report, quiet=True)

    assert console.export_text() == ""
