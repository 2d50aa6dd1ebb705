"""Progress display for scenario planning."""

from __future__ import annotations

from collections.abc import Callable, Iterator
from contextlib import contextmanager
from typing import Any, final

from rich.console import Console
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TaskID, TextColumn, TimeElapsedColumn

from chemdecarb.core.vocabulary import BASE_YEAR, HORIZON
from chemdecarb.infra.logger.logger import PathwayRichHandler, logger

YEARS_PER_SCENARIO = HORIZON - BASE_YEAR + 1


def handler_console() -> Console | None:
    """Console of the installed rich log handler, so bars and log lines share a stream."""

    for handler in logger.handlers:
        if isinstance(handler, PathwayRichHandler):
            return handler.console
    return None


@final
class ProgressDisplay:
    """One progress bar per scenario, advanced once per decision year."""

    def __init__(self, *, quiet: bool = False) -> None:
        self.quiet = quiet

    @contextmanager
    def track(self) -> Iterator[Callable[[str, int], None] | None]:
        if self.quiet:
            yield None
            return

        progress_kwargs: dict[str, Any] = {
            "transient": True,
            "redirect_stdout": False,
            "redirect_stderr": False,
        }
        console = handler_console()
        if console is not None:
            progress_kwargs["console"] = console

        columns = (
            TextColumn("[cyan]{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            TimeElapsedColumn(),
        )
        with Progress(*columns, **progress_kwargs) as progress:
            tasks: dict[str, TaskID] = {}

            def _cb(scenario: str, year: int) -> None:
                if scenario not in tasks:
                    tasks[scenario] = progress.add_task(f"Planning {scenario}", total=YEARS_PER_SCENARIO)
                progress.update(
                    tasks[scenario],
                    completed=year - BASE_YEAR + 1,
                    description=f"Planning {scenario} {year}",
                )

            yield _cb
