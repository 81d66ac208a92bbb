"""File formats, amplitude expressions, and runtime options."""

from .amplitude import DEFAULT_TOL, approx_eq, format_amplitude, parse_amplitude
from .loaders import (
    dump_document,
    parse_dfa_document,
    parse_machine_document,
    read_dfa_file,
    read_machine_file,
)
from .models import ENDMARKERS, LEFT_END, RIGHT_END, DfaFile, MachineFile
from .options import RunOptions, strand_budget_from_env

__all__ = [
    "DEFAULT_TOL",
    "ENDMARKERS",
    "LEFT_END",
    "RIGHT_END",
    "DfaFile",
    "MachineFile",
    "RunOptions",
    "approx_eq",
    "dump_document",
    "format_amplitude",
    "parse_amplitude",
    "parse_dfa_document",
    "parse_machine_document",
    "read_dfa_file",
    "read_machine_file",
    "strand_budget_from_env",
]
