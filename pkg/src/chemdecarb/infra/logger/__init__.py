"""Logging infrastructure."""

from chemdecarb.infra.logger.logger import (
    DEFAULT_LOG_FILE,
    PathwayEvent,
    PathwayRichHandler,
    logger,
    setup_logger,
)

__all__ = ["DEFAULT_LOG_FILE", "PathwayEvent", "PathwayRichHandler", "logger", "setup_logger"]
