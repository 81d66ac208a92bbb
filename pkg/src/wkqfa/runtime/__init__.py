"""Simulation engines and acceptance decisions."""

from .classical import ClassicalVerdict, classical_run
from .decide import accepts, language_sweep, upper_alphabet, words_up_to
from .dense import dense_run
from .engine import default_step_cap, run_strand, step
from .models import (
    AcceptancePolicy,
    Configuration,
    Decision,
    HaltReason,
    PolicyMode,
    RunOutcome,
    StepRecord,
    SweepRow,
)

__all__ = [
    "AcceptancePolicy",
    "ClassicalVerdict",
    "Configuration",
    "Decision",
    "HaltReason",
    "PolicyMode",
    "RunOutcome",
    "StepRecord",
    "SweepRow",
    "accepts",
    "classical_run",
    "default_step_cap",
    "dense_run",
    "language_sweep",
    "run_strand",
    "step",
    "upper_alphabet",
    "words_up_to",
]
