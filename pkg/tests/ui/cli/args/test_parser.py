"""Tests for command line argument parser."""

import logging
from argparse import Namespace
from pathlib import Path
from unittest.mock import MagicMock

import pytest
from pytest_mock import MockerFixture

from chemdecarb.infra.logger.logger import DEFAULT_LOG_FILE
from chemdecarb.ui.cli.args import ArgumentParser, ReportArgs, RunArgs, SynthArgs


@pytest.fixture
def mock_config(mocker: MockerFixture) -> MagicMock:
    """Configuration without a log file or output directory."""

    config_cls = mocker.patch("chemdecarb.ui.cli.args.parser.Config")
    config = config_cls.load.return_value
    config.log_file = None
    config.output_dir = None
    return config


@pytest.fixture
def mock_setup_logger(mocker: MockerFixture) -> MagicMock:
    return mocker.patch("chemdecarb.ui.cli.args.parser.setup_logger")


def test_create_parser() -> None:
    """Argument parser should expose the three subcommands."""

    parser = ArgumentParser.create_parser()

    synth: Namespace = parser.parse_args(["synth", "--seed", "7"])
    assert synth.command == "synth"
    assert synth.seed == 7

    run: Namespace = parser.parse_args(["run", "--scenario", "SU", "--scenario", "ga.json", "--frozen-reference"])
    assert run.command == "run"
    assert run.scenario == ["SU", "ga.json"]
    assert run.frozen_reference

    report: Namespace = parser.parse_args(["report", "runs/a", "--csv", "matrix.csv"])
    assert report.run_dir == "runs/a"
    assert report.csv == "matrix.csv"


def test_subcommand_is_required() -> None:
    """A bare invocation is a usage error."""

    with pytest.raises(SystemExit) as excinfo:
        _ = ArgumentParser.create_parser().parse_args([])
    assert excinfo.value.code == 2


class TestProcessSynth:
    def test_defaults(self, tmp_path: Path, mock_config: MagicMock, mock_setup_logger: MagicMock) -> None:
        """Synth arguments carry the output directory and no overrides."""

        args = ArgumentParser.process_args(["synth", "--out", str(tmp_path)])

        assert isinstance(args, SynthArgs)
        assert args.out_dir == tmp_path
        assert args.spec_path is None
        assert args.seed is None
        mock_setup_logger.assert_called_once_with(log_file=DEFAULT_LOG_FILE, console_level=logging.INFO)

    def test_output_dir_from_config(self, tmp_path: Path, mock_config: MagicMock, mock_setup_logger: MagicMock) -> None:
        mock_config.output_dir = tmp_path / "configured"

        args = ArgumentParser.process_args(["synth", "--spec", "spec.json"])

        assert args.out_dir == tmp_path / "configured"
        assert isinstance(args, SynthArgs)
        assert args.spec_path == Path("spec.json")

    def test_missing_output_dir_exits(self, mock_config: MagicMock, mock_setup_logger: MagicMock) -> None:
        """Without --out or a configured output_dir the parser stops."""

        with pytest.raises(SystemExit) as excinfo:
            _ = ArgumentParser.process_args(["synth"])
        assert excinfo.value.code == 2


class TestProcessRun:
    def test_default_scenario(self, tmp_path: Path, mock_config: MagicMock, mock_setup_logger: MagicMock) -> None:
        args = ArgumentParser.process_args(["run", "--out", str(tmp_path)])

        assert isinstance(args, RunArgs)
        assert args.scenarios == ["SU"]
        assert args.assets_path is None
        assert not args.frozen_reference

    def test_all_inputs(self, tmp_path: Path, mock_config: MagicMock, mock_setup_logger: MagicMock) -> None:
        assets = tmp_path / "assets.csv"
        assets.write_text("asset_id\n")

        args = ArgumentParser.process_args(
            [
                "run",
                "--assets",
                str(assets),
                "--scenario",
                "GA",
                "--scenario",
                "GG",
                "--catalog",
                "catalog.json",
                "--finance",
                "finance.json",
                "--prices",
                "prices.json",
                "--growth",
                "growth.json",
                "--seed",
                "11",
                "--out",
                str(tmp_path / "run"),
            ]
        )

        assert isinstance(args, RunArgs)
        assert args.assets_path == assets
        assert args.scenarios == ["GA", "GG"]
        assert (args.catalog_path, args.finance_path) == (Path("catalog.json"), Path("finance.json"))
        assert (args.prices_path, args.growth_path) == (Path("prices.json"), Path("growth.json"))
        assert args.seed == 11
        assert args.out_dir == tmp_path / "run"

    def test_missing_asset_table_exits(
        self, tmp_path: Path, mock_config: MagicMock, mock_setup_logger: MagicMock
    ) -> None:
        with pytest.raises(SystemExit) as excinfo:
            _ = ArgumentParser.process_args(["run", "--assets", str(tmp_path / "nope.csv"), "--out", str(tmp_path)])
        assert excinfo.value.code == 2


class TestProcessReport:
    def test_run_dir(self, tmp_path: Path, mock_config: MagicMock, mock_setup_logger: MagicMock) -> None:
        args = ArgumentParser.process_args(["report", str(tmp_path), "--csv", "matrix.csv"])

        assert isinstance(args, ReportArgs)
        assert args.run_dir == tmp_path
        assert args.csv_path == Path("matrix.csv")

    def test_missing_run_dir_exits(self, tmp_path: Path, mock_config: MagicMock, mock_setup_logger: MagicMock) -> None:
        with pytest.raises(SystemExit) as excinfo:
            _ = ArgumentParser.process_args(["report", str(tmp_path / "missing")])
        assert excinfo.value.code == 2


class TestVerbosity:
    @pytest.mark.parametrize(
        ("flag", "level"),
        [("--quiet", logging.ERROR), ("--verbose", logging.DEBUG)],
    )
    def test_flag_sets_console_level(
        self,
        tmp_path: Path,
        flag: str,
        level: int,
        mock_config: MagicMock,
        mock_setup_logger: MagicMock,
    ) -> None:
        args = ArgumentParser.process_args(["report", str(tmp_path), flag])

        assert args.quiet is (flag == "--quiet")
        assert args.verbose is (flag == "--verbose")
        mock_setup_logger.assert_called_once_with(log_file=DEFAULT_LOG_FILE, console_level=level)

    def test_configured_log_file(self, tmp_path: Path, mock_config: MagicMock, mock_setup_logger: MagicMock) -> None:
        mock_config.log_file = tmp_path / "run.log"

        _ = ArgumentParser.process_args(["report", str(tmp_path)])

        mock_setup_logger.assert_called_once_with(log_file=tmp_path / "run.log", console_level=logging.INFO)
