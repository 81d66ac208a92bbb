"""Machine model, operator completion and well-formedness checks."""

from .completion import complete_operators
from .model import (
    Alphabet,
    ComplementarityRelation,
    DeltaEntry,
    MachineDef,
    derive_delta,
    is_strong,
    load_machine,
    machine_to_document,
)
from .wellformed import WellFormedReport, check_well_formed, extend_to_unitary

__all__ = [
    "Alphabet",
    "ComplementarityRelation",
    "DeltaEntry",
    "MachineDef",
    "WellFormedReport",
    "check_well_formed",
    "complete_operators",
    "derive_delta",
    "extend_to_unitary",
    "is_strong",
    "load_machine",
    "machine_to_document",
]
