"""File logging for CLI commands; stdout carries only results."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from logging.handlers import RotatingFileHandler
from pathlib import Path

from .version import get_version

DEFAULT_LOG_DIR = Path(".wkqfa/logs")
DEFAULT_LOG_FILE = "wkqfa.log"
LOG_DIR_ENV_VAR = "WKQFA_LOG_DIR"
LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"


@dataclass(slots=True)
class LoggingContext:
    """Where this command logs, and the package logger to use for it."""

    log_path: Path
    logger: logging.Logger


def resolve_log_dir(log_dir: Path | None = None) -> Path:
    """Return the log directory: explicit argument, then ``WKQFA_LOG_DIR``, then the default."""

    if log_dir is not None:
        return log_dir.resolve()
    override = os.environ.get(LOG_DIR_ENV_VAR, "").strip()
    return (Path(override) if override else DEFAULT_LOG_DIR).resolve()


def configure_logging(
    *,
    verbose: bool,
    command: str,
    log_dir: Path | None = None,
) -> LoggingContext:
    """Route every ``wkqfa`` record to a rotating log file.

    Verbose runs also keep ``DEBUG`` records from completion and corpus loading.
    """

    target_dir = resolve_log_dir(log_dir)
    target_dir.mkdir(parents=True, exist_ok=True)
    log_path = target_dir / DEFAULT_LOG_FILE

    root = logging.getLogger()
    root.setLevel(logging.DEBUG if verbose else logging.INFO)
    for existing in list(root.handlers):
        root.removeHandler(existing)
        existing.close()

    file_handler = RotatingFileHandler(
        log_path, maxBytes=1024 * 1024, backupCount=3, encoding="utf-8"
    )
    file_handler.setFormatter(logging.Formatter(fmt=LOG_FORMAT, datefmt="%Y-%m-%dT%H:%M:%S"))
    root.addHandler(file_handler)

    logger = logging.getLogger("wkqfa")
    logger.info("wkqfa %s: %s", get_version(), command)
    return LoggingContext(log_path=log_path, logger=logger)


def shutdown_logging() -> None:
    """Flush and close logging handlers."""

    logging.shutdown()
