"""Command line argument parser."""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import final

from chemdecarb.config.config import Config
from chemdecarb.infra.logger.logger import DEFAULT_LOG_FILE, logger, setup_logger
from chemdecarb.ui.cli.args.options import CLIArgs, ReportArgs, RunArgs, SynthArgs

DEFAULT_SCENARIO = "SU"


def _optional_path(value: str | None) -> Path | None:
    return Path(value) if value else None


def _add_verbosity(parser: argparse.ArgumentParser) -> None:
    _ = parser.add_argument(
        "--verbose",
        action="store_true",
        help="Show detailed planning information",
    )
    _ = parser.add_argument(
        "--quiet",
        action="store_true",
        help="Suppress all output except errors",
    )


@final
class ArgumentParser:
    """Command line argument parser."""

    @staticmethod
    def create_parser() -> argparse.ArgumentParser:
        """Create argument parser.

        Returns:
            argparse.ArgumentParser: Configured argument parser.
        """
        parser = argparse.ArgumentParser(
            prog="chemdecarb",
            description="chemdecarb - facility-level decarbonization pathways for building-block chemicals.",
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )

        subparsers = parser.add_subparsers(dest="command", required=True)

        synth_parser = subparsers.add_parser(
            "synth",
            help="Generate a synthetic asset table from a synthesis spec",
        )
        _ = synth_parser.add_argument(
            "--spec",
            type=str,
            help="Synthesis spec JSON (defaults to the shipped world spec)",
            metavar="PATH",
        )
        _ = synth_parser.add_argument(
            "--seed",
            type=int,
            help="Override the seed stored in the spec",
        )
        _ = synth_parser.add_argument(
            "--out",
            type=str,
            help="Directory receiving assets.csv and manifest.json (defaults to output_dir from config)",
            metavar="DIR",
        )
        _add_verbosity(synth_parser)

        run_parser = subparsers.add_parser(
            "run",
            help="Plan one or more scenarios and write the pathway tables",
        )
        _ = run_parser.add_argument(
            "--assets",
            type=str,
            help="Asset table CSV (synthesizes the world spec when omitted)",
            metavar="CSV",
        )
        _ = run_parser.add_argument(
            "--scenario",
            action="append",
            help="Preset name (SU, GA, GG) or scenario JSON; repeat for several",
            metavar="NAME_OR_PATH",
        )
        for flag, what in (
            ("--catalog", "Abatement technology catalog"),
            ("--finance", "Financial parameters"),
            ("--prices", "Regional energy prices"),
            ("--growth", "Production growth table"),
        ):
            _ = run_parser.add_argument(flag, type=str, help=f"{what} JSON", metavar="PATH")
        _ = run_parser.add_argument(
            "--seed",
            type=int,
            help="Seed for the synthesized asset table",
        )
        _ = run_parser.add_argument(
            "--frozen-reference",
            action="store_true",
            help="Also emit the REF series with 2023 intensities held fixed",
        )
        _ = run_parser.add_argument(
            "--out",
            type=str,
            help="Run directory receiving the output tables (defaults to output_dir from config)",
            metavar="DIR",
        )
        _add_verbosity(run_parser)

        report_parser = subparsers.add_parser(
            "report",
            help="Summarize a run directory",
        )
        _ = report_parser.add_argument(
            "run_dir",
            type=str,
            help="Directory written by 'chemdecarb run'",
            metavar="RUN_DIR",
        )
        _ = report_parser.add_argument(
            "--csv",
            type=str,
            help="Also write the capital matrix to this CSV",
            metavar="PATH",
        )
        _add_verbosity(report_parser)

        return parser

    @staticmethod
    def process_args(args_list: Sequence[str] | None = None) -> CLIArgs:
        """Process command line arguments.

        Args:
            args_list: List of command line arguments (for testing).

        Returns:
            CLIArgs: Processed command line arguments.

        Raises:
            SystemExit: On usage errors.
        """
        parser = ArgumentParser.create_parser()
        parsed_args = parser.parse_args(args_list)

        # Set log level based on verbosity flags
        if parsed_args.quiet:
            log_level = logging.ERROR
        elif parsed_args.verbose:
            log_level = logging.DEBUG
        else:
            log_level = logging.INFO

        configuration = Config.load()
        log_file_path = configuration.log_file or DEFAULT_LOG_FILE
        _ = setup_logger(log_file=log_file_path, console_level=log_level)

        command: str = parsed_args.command

        if command == "synth":
            return ArgumentParser._process_synth(parsed_args, configuration)

        if command == "run":
            return ArgumentParser._process_run(parsed_args, configuration)

        if command == "report":
            return ArgumentParser._process_report(parsed_args)

        logger.error("Unsupported command: %s", command)
        sys.exit(2)

    @staticmethod
    def _out_dir(parsed_args: argparse.Namespace, configuration: Config) -> Path:
        if parsed_args.out:
            return Path(parsed_args.out)
        if configuration.output_dir is not None:
            return configuration.output_dir
        logger.error("No output directory: pass --out or set output_dir in the config file")
        sys.exit(2)

    @staticmethod
    def _process_synth(parsed_args: argparse.Namespace, configuration: Config) -> SynthArgs:
        return SynthArgs(
            command="synth",
            out_dir=ArgumentParser._out_dir(parsed_args, configuration),
            spec_path=_optional_path(parsed_args.spec),
            seed=parsed_args.seed,
            verbose=parsed_args.verbose,
            quiet=parsed_args.quiet,
        )

    @staticmethod
    def _process_run(parsed_args: argparse.Namespace, configuration: Config) -> RunArgs:
        assets_path = _optional_path(parsed_args.assets)
        if assets_path is not None and not assets_path.is_file():
            logger.error("Asset table does not exist: %s", assets_path)
            sys.exit(2)

        return RunArgs(
            command="run",
            out_dir=ArgumentParser._out_dir(parsed_args, configuration),
            assets_path=assets_path,
            scenarios=list(parsed_args.scenario or [DEFAULT_SCENARIO]),
            catalog_path=_optional_path(parsed_args.catalog),
            finance_path=_optional_path(parsed_args.finance),
            prices_path=_optional_path(parsed_args.prices),
            growth_path=_optional_path(parsed_args.growth),
            seed=parsed_args.seed,
            frozen_reference=parsed_args.frozen_reference,
            verbose=parsed_args.verbose,
            quiet=parsed_args.quiet,
        )

    @staticmethod
    def _process_report(parsed_args: argparse.Namespace) -> ReportArgs:
        run_dir = Path(parsed_args.run_dir)
        if not run_dir.is_dir():
            logger.error("Run directory does not exist: %s", run_dir)
            sys.exit(2)

        return ReportArgs(
            command="report",
            run_dir=run_dir,
            csv_path=_optional_path(parsed_args.csv),
            verbose=parsed_args.verbose,
            quiet=parsed_args.quiet,
        )
