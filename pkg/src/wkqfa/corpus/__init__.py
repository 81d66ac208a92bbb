"""Built-in corpus machines and their classical oracles."""

from .registry import (
    CorpusEntry,
    corpus_document,
    export_machine,
    get_machine,
    list_machines,
    oracle_membership,
)

__all__ = [
    "CorpusEntry",
    "corpus_document",
    "export_machine",
    "get_machine",
    "list_machines",
    "oracle_membership",
]
