"""Logging utilities with singleton pattern to prevent duplicate loggers.

Console output goes to stderr: stdout carries the reports, which must stay
byte-stable for a fixed input.
"""

import logging
import sys
from pathlib import Path

from rich.console import Console
from rich.logging import RichHandler

from .settings import get_settings

# Keep track of configured loggers to prevent duplicates
_configured_loggers: set[str] = set()

PACKAGE_LOGGER = "fixpoint_bounds"


def get_logger(
    name: str,
    level: str | None = None,
    log_file: Path | None = None,
    *,
    rich_console: bool | None = None,
) -> logging.Logger:
    """Get a logger instance - configured only once per name.

    Arguments left as ``None`` fall back to :class:`~fixpoint_bounds.settings.Settings`.

    Args:
        name: Logger name (use __name__ or module path)
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional file path for file logging
        rich_console: Whether to use Rich formatting for console output

    Returns:
        Configured logger instance

    Example:
        ```python
        from fixpoint_bounds.logging import get_logger

        logger = get_logger(__name__)
        logger.info("Certifying %s", dataset.label)
        ```
    """
    settings = get_settings()
    level = level or settings.log_level
    log_file = log_file or settings.log_file
    rich_console = settings.rich_console if rich_console is None else rich_console

    logger = logging.getLogger(name)
    config_key = f"{name}:{level}:{log_file}:{rich_console}"

    if config_key not in _configured_loggers:
        for handler in logger.handlers[:]:
            logger.removeHandler(handler)

        logger.setLevel(getattr(logging, level.upper()))

        handlers: list[logging.Handler] = []
        if rich_console:
            handlers.append(
                RichHandler(
                    console=Console(stderr=True),
                    rich_tracebacks=True,
                    show_path=False,
                    show_time=True,
                )
            )
        else:
            handlers.append(logging.StreamHandler(sys.stderr))

        if log_file:
            log_file.parent.mkdir(parents=True, exist_ok=True)
            handlers.append(logging.FileHandler(log_file))

        formatter = logging.Formatter(
            "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
        )
        for handler in handlers:
            handler.setFormatter(formatter)
            logger.addHandler(handler)

        logger.propagate = False
        _configured_loggers.add(config_key)

    return logger


def setup_logging(
    level: str | None = None,
    log_file: Path | None = None,
    *,
    rich_console: bool | None = None,
) -> logging.Logger:
    """Configure the package logger and every module logger already handed out.

    Module loggers are created at import time with the settings defaults; the
    CLI calls this once flags are parsed so ``--verbose`` reaches all of them.
    """
    root = get_logger(PACKAGE_LOGGER, level, log_file, rich_console=rich_console)
    for name in list(logging.Logger.manager.loggerDict):
        if name.startswith(f"{PACKAGE_LOGGER}."):
            get_logger(name, level, log_file, rich_console=rich_console)
    return root


def clear_logger_cache() -> None:
    """Clear the logger cache - useful for testing."""
    _configured_loggers.clear()

    for logger_name in list(logging.Logger.manager.loggerDict.keys()):
        logger = logging.getLogger(logger_name)
        for handler in logger.handlers[:]:
            logger.removeHandler(handler)
