"""Map exceptions raised under a CLI command to stderr text and an exit code."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .config.options import BUDGET_ENV_VAR
from .errors import HeadOverrunError, MachineValidationError, StrandBudgetExceeded, WkqfaError

MAX_LISTED_ERRORS = 10


@dataclass(slots=True)
class CliErrorResult:
    """The mapped CLI outcome for an exception."""

    exit_code: int
    message: str


def handle_cli_exception(exc: BaseException, logger: logging.Logger) -> CliErrorResult:
    """Map an exception to a user-facing message and exit code.

    Budget and head-overrun failures (exit codes 3 and 4) are logged as errors.
    Input problems are logged as warnings. Anything else is logged with its
    traceback and reported as exit code 1.
    """

    if isinstance(exc, KeyboardInterrupt):
        logger.info("Interrupted by user")
        return CliErrorResult(exit_code=130, message="Interrupted.")

    if isinstance(exc, WkqfaError):
        level = logging.ERROR if exc.exit_code >= 3 else logging.WARNING
        logger.log(level, "%s", exc.message, extra={"error_details": exc.details})
        return CliErrorResult(exit_code=exc.exit_code, message=_describe(exc))

    logger.exception("Unexpected error during CLI execution")
    return CliErrorResult(exit_code=1, message="Unexpected error. See log file for details.")


def _describe(exc: WkqfaError) -> str:
    lines = [exc.message]
    if isinstance(exc, MachineValidationError):
        extra = list(exc.details.get("errors", []))[1:]
        lines.extend(f"  - {item}" for item in extra[:MAX_LISTED_ERRORS])
        if len(extra) > MAX_LISTED_ERRORS:
            lines.append(f"  ... and {len(extra) - MAX_LISTED_ERRORS} more")
    elif isinstance(exc, StrandBudgetExceeded):
        lines.append(f"Raise {BUDGET_ENV_VAR} or use a shorter word.")
    elif isinstance(exc, HeadOverrunError):
        lines.append("Check the directions of states entered on '$'.")
    return "\n".join(lines)
