"""Human-readable and machine-readable result rendering."""

from .output_mode import OutputFormat, resolve_output_format
from .records import (
    SWEEP_COLUMNS,
    decision_record,
    json_line,
    outcome_record,
    report_record,
    sweep_record,
    tsv_lines,
)
from .table import (
    format_decision,
    format_outcome,
    print_corpus,
    print_report,
    print_sweep,
    probability,
)

__all__ = [
    "SWEEP_COLUMNS",
    "OutputFormat",
    "decision_record",
    "format_decision",
    "format_outcome",
    "json_line",
    "outcome_record",
    "print_corpus",
    "print_report",
    "print_sweep",
    "probability",
    "report_record",
    "resolve_output_format",
    "sweep_record",
    "tsv_lines",
]
