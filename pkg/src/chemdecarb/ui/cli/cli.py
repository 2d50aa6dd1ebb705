"""Command line interface for chemdecarb."""

from typing import Final, final

from chemdecarb.core.errors import InputError
from chemdecarb.infra.logger.logger import logger
from chemdecarb.ui.cli.args import ArgumentParser
from chemdecarb.ui.cli.args.options import CLIArgs, ReportArgs, RunArgs, SynthArgs
from chemdecarb.ui.cli.commands import ReportCommand, RunCommand, SynthCommand

EXIT_OK: Final[int] = 0
EXIT_UNEXPECTED: Final[int] = 1
EXIT_INPUT: Final[int] = 2
EXIT_IO: Final[int] = 3
EXIT_INTERRUPTED: Final[int] = 130


@final
class CommandProcessor:
    """Command line interface processor."""

    @staticmethod
    def process_command(args_list: list[str] | None = None) -> int:
        """Process command line arguments.

        Args:
            args_list: List of command line arguments (for testing).

        Returns:
            int: 0 on success, 2 on input errors, 3 on I/O errors.
        """
        try:
            args: CLIArgs = ArgumentParser.process_args(args_list)

            if isinstance(args, SynthArgs):
                _ = SynthCommand(args).execute()
            elif isinstance(args, RunArgs):
                _ = RunCommand(args).execute()
            else:
                assert isinstance(args, ReportArgs)
                _ = ReportCommand(args).execute()
            return EXIT_OK

        except KeyboardInterrupt:
            logger.info("\nOperation cancelled by user")
            return EXIT_INTERRUPTED
        except InputError as e:
            logger.error("%s", e)
            return EXIT_INPUT
        except OSError as e:
            logger.error("I/O error: %s", e)
            return EXIT_IO
        except Exception as e:
            logger.error("An unexpected error occurred: %s", str(e))
            return EXIT_UNEXPECTED


def main() -> int:
    """Main entry point.

    Returns:
        int: Process exit code.
    """
    return CommandProcessor.process_command()
