"""DFA to WKQFA compilation."""

from .construction import CompileSummary, compile_dfa, summarize
from .dfa import DfaDef, dfa_run, dfa_to_document, load_dfa, random_dfa, read_dfa

__all__ = [
    "CompileSummary",
    "DfaDef",
    "compile_dfa",
    "dfa_run",
    "dfa_to_document",
    "load_dfa",
    "random_dfa",
    "read_dfa",
    "summarize",
]
