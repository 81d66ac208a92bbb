"""Output format resolution for CLI commands."""

from __future__ import annotations

from enum import StrEnum

from ..errors import WkqfaError


class OutputFormat(StrEnum):
    """Supported result formats."""

    TEXT = "text"
    JSON = "json"
    TSV = "tsv"


def resolve_output_format(requested: str) -> OutputFormat:
    """Return the output format named ``requested``."""

    try:
        return OutputFormat(requested.lower())
    except ValueError as exc:
        choices = ", ".join(item.value for item in OutputFormat)
        raise WkqfaError(
            f"Unsupported output format '{requested}'. Choose one of: {choices}",
            exit_code=2,
        ) from exc
