"""Centralized logging configuration for chemdecarb."""

from __future__ import annotations

import logging
import logging.handlers
from enum import StrEnum
from pathlib import Path
from typing import Any, ClassVar, override

from rich.console import Console, ConsoleRenderable
from rich.logging import RichHandler
from rich.style import Style
from rich.text import Text

from chemdecarb.config.paths import default_log_file

LOGGER_NAME = "chemdecarb"


class PathwayEvent(StrEnum):
    """Structured events attached to log records via ``extra={"pathway_event": ...}``."""

    SYNTH_START = "synth.start"
    SYNTH_COMPLETE = "synth.complete"
    RUN_START = "run.start"
    RUN_SCENARIO_START = "run.scenario.start"
    RUN_SCENARIO_COMPLETE = "run.scenario.complete"
    RUN_CELL_COMPLETE = "run.cell.complete"
    RUN_OUTPUT_WRITE = "run.output.write"
    RUN_COMPLETE = "run.complete"
    REPORT_COMPLETE = "report.complete"
    VALIDATION_VIOLATION = "validation.violation"
    SCHEDULE_BLOCKED = "schedule.blocked"
    SCHEDULE_UNFINISHED = "schedule.unfinished"
    STORAGE_EXHAUSTED = "storage.exhausted"


class PathwayRichHandler(RichHandler):
    """Rich handler rendering pathway events as compact, colour-coded lines."""

    _EVENT_STYLES: ClassVar[dict[str, tuple[str, str]]] = {
        PathwayEvent.SYNTH_START: ("🧪", "cyan"),
        PathwayEvent.SYNTH_COMPLETE: ("✅", "green"),
        PathwayEvent.RUN_START: ("🚀", "cyan"),
        PathwayEvent.RUN_SCENARIO_START: ("🗺️", "blue"),
        PathwayEvent.RUN_SCENARIO_COMPLETE: ("✅", "green"),
        PathwayEvent.RUN_CELL_COMPLETE: ("🏭", "blue"),
        PathwayEvent.RUN_OUTPUT_WRITE: ("📦", "magenta"),
        PathwayEvent.RUN_COMPLETE: ("🎉", "green"),
        PathwayEvent.REPORT_COMPLETE: ("📊", "green"),
        PathwayEvent.VALIDATION_VIOLATION: ("⛔", "red"),
        PathwayEvent.SCHEDULE_BLOCKED: ("🚧", "yellow"),
        PathwayEvent.SCHEDULE_UNFINISHED: ("⏳", "yellow"),
        PathwayEvent.STORAGE_EXHAUSTED: ("🛢️", "red"),
    }
    _LABELS: ClassVar[dict[str, str]] = {
        PathwayEvent.SYNTH_START: "Synthesizing assets",
        PathwayEvent.SYNTH_COMPLETE: "Synthesis complete",
        PathwayEvent.RUN_START: "Run start",
        PathwayEvent.RUN_SCENARIO_START: "Scenario start",
        PathwayEvent.RUN_SCENARIO_COMPLETE: "Scenario complete",
        PathwayEvent.RUN_CELL_COMPLETE: "Cell planned",
        PathwayEvent.RUN_OUTPUT_WRITE: "Wrote",
        PathwayEvent.RUN_COMPLETE: "Run complete",
        PathwayEvent.REPORT_COMPLETE: "Report ready",
        PathwayEvent.VALIDATION_VIOLATION: "Validation violation",
        PathwayEvent.SCHEDULE_BLOCKED: "Project blocked",
        PathwayEvent.SCHEDULE_UNFINISHED: "Unabated at horizon",
        PathwayEvent.STORAGE_EXHAUSTED: "Storage exhausted",
    }
    # Extras shown as key=value, in this order.
    _DETAIL_KEYS: ClassVar[tuple[str, ...]] = (
        "scenario",
        "region",
        "group",
        "facility_id",
        "row",
        "field",
        "assets",
        "facilities",
        "projects",
        "completion",
        "unabated",
        "blocked",
        "annual_co2",
    )

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        kwargs["show_time"] = False
        kwargs["show_path"] = False
        kwargs["show_level"] = False
        kwargs["rich_tracebacks"] = True
        kwargs["markup"] = True
        kwargs["omit_repeated_times"] = False
        super().__init__(*args, **kwargs)

    def _render_pathway_message(self, record: logging.LogRecord, message: str) -> Text | None:
        """Render structured pathway events with dedicated styling."""

        event = getattr(record, "pathway_event", None)
        if not isinstance(event, str):
            return None

        icon, color = self._EVENT_STYLES.get(event, ("ℹ️", "blue"))
        text = Text()
        _ = text.append(f"{icon} ", style=Style(color=color, bold=True))

        body = Text(style=Style(color=color))
        _ = body.append(self._LABELS.get(event, event))

        details: list[str] = []
        for key in self._DETAIL_KEYS:
            value = getattr(record, key, None)
            if value is None:
                continue
            if isinstance(value, float):
                details.append(f"{key}={value:,.0f}")
            else:
                details.append(f"{key}={value}")
        duration = getattr(record, "duration_seconds", None)
        if isinstance(duration, (int, float)):
            details.append(f"duration={duration:.2f}s")
        if details:
            _ = body.append(" [" + ", ".join(details) + "]")

        path = getattr(record, "path", None)
        if path:
            _ = body.append(" @ ")
            _ = body.append(str(path), style=Style(color="white"))

        if event == PathwayEvent.VALIDATION_VIOLATION and message:
            _ = body.append(f" ({message})")

        _ = text.append_text(body)
        return text

    @override
    def render_message(self, record: logging.LogRecord, message: str) -> ConsoleRenderable:
        pathway_text = self._render_pathway_message(record, message)
        if pathway_text is not None:
            return pathway_text
        return super().render_message(record, message)


DEFAULT_LOG_FILE: Path = default_log_file()


def setup_logger(
    log_file: Path | None = None,
    console_level: int = logging.INFO,
    file_level: int = logging.DEBUG,
) -> logging.Logger:
    """Set up and configure the application logger.

    Args:
        log_file: Path to the log file. If None, only console logging is enabled.
        console_level: Logging level for console output. Defaults to INFO.
        file_level: Logging level for file output. Defaults to DEBUG.

    Returns:
        logging.Logger: Configured logger instance.
    """
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(logging.DEBUG)

    for handler in list(logger.handlers):
        handler.close()
    logger.handlers.clear()

    console = Console(force_terminal=True, soft_wrap=True, stderr=True)
    console_handler = PathwayRichHandler(console=console)
    console_handler.setLevel(console_level)
    logger.addHandler(console_handler)

    if log_file is not None:
        resolved_log_file = Path(log_file).expanduser().resolve()
        resolved_log_file.parent.mkdir(parents=True, exist_ok=True)

        file_handler = logging.handlers.RotatingFileHandler(
            resolved_log_file,
            maxBytes=10 * 1024 * 1024,
            backupCount=5,
            encoding="utf-8",
        )
        file_handler.setLevel(file_level)
        file_handler.setFormatter(logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s"))
        logger.addHandler(file_handler)

    return logger


# Console-only until the CLI attaches the configured log file.
logger = setup_logger()
