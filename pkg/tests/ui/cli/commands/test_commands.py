"""Tests for the synth, run and report commands."""

from pathlib import Path
from unittest.mock import MagicMock

from pytest_mock import MockerFixture

from chemdecarb.application.services.run_service import RunRequest
from chemdecarb.application.services.synth_service import SynthRequest
from chemdecarb.ui.cli.args.options import ReportArgs, RunArgs, SynthArgs
from chemdecarb.ui.cli.commands import ReportCommand, RunCommand, SynthCommand


def test_synth_command(mocker: MockerFixture) -> None:
    """Synth passes its arguments to the service and shows the result."""

    service = mocker.patch("chemdecarb.ui.cli.commands.synth.SynthService").return_value
    display = mocker.patch("chemdecarb.ui.cli.commands.synth.SummaryDisplay").return_value
    args = SynthArgs(
        command="synth",
        out_dir=Path("out"),
        spec_path=Path("spec.json"),
        seed=9,
        verbose=False,
        quiet=True,
    )

    result = SynthCommand(args).execute()

    service.run.assert_called_once_with(SynthRequest(out_dir=Path("out"), spec_path=Path("spec.json"), seed=9))
    display.show_synth.assert_called_once_with(result, quiet=True)


def test_run_command_wires_progress(mocker: MockerFixture) -> None:
    """Run hands the progress callback to the service."""

    service = mocker.patch("chemdecarb.ui.cli.commands.run.RunService").return_value
    progress = mocker.patch("chemdecarb.ui.cli.commands.run.ProgressDisplay")
    display = mocker.patch("chemdecarb.ui.cli.commands.run.SummaryDisplay").return_value
    callback = MagicMock()
    progress.return_value.track.return_value.__enter__.return_value = callback
    args = RunArgs(
        command="run",
        out_dir=Path("runs/a"),
        assets_path=Path("assets.csv"),
        scenarios=["SU", "GG"],
        frozen_reference=True,
    )

    result = RunCommand(args).execute()

    progress.assert_called_once_with(quiet=False)
    (request, passed), _ = service.run.call_args
    assert passed is callback
    assert request == RunRequest(
        out_dir=Path("runs/a"),
        assets_path=Path("assets.csv"),
        scenarios=["SU", "GG"],
        frozen_reference=True,
    )
    display.show_run.assert_called_once_with(result, quiet=False)


def test_report_command_writes_csv_on_request(mocker: MockerFixture) -> None:
    service = mocker.patch("chemdecarb.ui.cli.commands.report.ReportService").return_value
    display = mocker.patch("chemdecarb.ui.cli.commands.report.SummaryDisplay").return_value
    args = ReportArgs(command="report", run_dir=Path("runs/a"), csv_path=Path("m.csv"), verbose=False, quiet=False)

    report = ReportCommand(args).execute()

    service.build.assert_called_once_with(Path("runs/a"))
    display.show_report.assert_called_once_with(report, quiet=False)
    service.write_csv.assert_called_once_with(report, Path("m.csv"))


def test_report_command_without_csv(mocker: MockerFixture) -> None:
    service = mocker.patch("chemdecarb.ui.cli.commands.report.ReportService").return_value
    _ = mocker.patch("chemdecarb.ui.cli.commands.report.SummaryDisplay")
    args = ReportArgs(command="report", run_dir=Path("runs/a"), csv_path=None, verbose=False, quiet=True)

    _ = ReportCommand(args).execute()

    service.write_csv.assert_not_called()
