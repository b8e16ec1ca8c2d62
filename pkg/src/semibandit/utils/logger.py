"""Logging utilities for the semi-bandit toolkit."""

import logging
import sys
from pathlib import Path
from typing import Optional, Union

ROOT_LOGGER = "semibandit"

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _parse_level(level: Union[str, int]) -> int:
    if isinstance(level, int):
        return level
    parsed = logging.getLevelName(level.upper())
    return parsed if isinstance(parsed, int) else logging.INFO


def setup_logger(name: str = ROOT_LOGGER,
                 level: Union[str, int] = "INFO",
                 log_file: Optional[Union[str, Path]] = None) -> logging.Logger:
    """
    Configure the package logger once per process or CLI invocation.

    Every module logs through ``get_logger(__name__)``, i.e. a child of
    ``semibandit``, so handlers live only on the package logger. Records go to
    stderr, keeping stdout free for tables and CSV written by the CLI.
    Calling this again closes and replaces the previous handlers.

    Args:
        name: Logger name, normally the package root
        level: Level name (case-insensitive) or number; unknown names fall back to INFO
        log_file: Optional file that receives the same records, appended

    Returns:
        The configured logger
    """
    logger = logging.getLogger(name)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    logger.setLevel(_parse_level(level))
    logger.propagate = False
    formatter = logging.Formatter(LOG_FORMAT)

    stream = logging.StreamHandler(sys.stderr)
    stream.setFormatter(formatter)
    logger.addHandler(stream)

    if log_file:
        path = Path(log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(path, mode="a", encoding="utf-8")
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def get_logger(name: str = ROOT_LOGGER) -> logging.Logger:
    """Logger for a module; names outside the package are nested under it."""
    if name != ROOT_LOGGER and not name.startswith(ROOT_LOGGER + "."):
        name = f"{ROOT_LOGGER}.{name}"
    return logging.getLogger(name)
