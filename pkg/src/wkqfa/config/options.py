"""Runtime options shared by the simulator, strand enumeration, and the CLI."""

from __future__ import annotations

import os
from collections.abc import Mapping
from dataclasses import dataclass

from ..errors import MachineValidationError
from .amplitude import DEFAULT_TOL

BUDGET_ENV_VAR = "WKQFA_STRAND_BUDGET"
DEFAULT_STRAND_BUDGET = 2**20

PRUNE_THRESHOLD = 1e-15
NORM_ANOMALY_TOL = 1e-6
HALT_THRESHOLD = 1e-12


@dataclass(frozen=True, slots=True)
class RunOptions:
    """Knobs for one simulation or acceptance decision."""

    step_cap: int | None = None
    trace: bool = False
    tol: float = DEFAULT_TOL
    strand_budget: int = DEFAULT_STRAND_BUDGET
    jobs: int = 1
    prune: float = PRUNE_THRESHOLD
    norm_tol: float = NORM_ANOMALY_TOL


def strand_budget_from_env(environ: Mapping[str, str] | None = None) -> int:
    """Return the strand budget, honoring ``WKQFA_STRAND_BUDGET`` when set."""

    env = os.environ if environ is None else environ
    raw = env.get(BUDGET_ENV_VAR)
    if raw is None or not raw.strip():
        return DEFAULT_STRAND_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise MachineValidationError(
            f"{BUDGET_ENV_VAR} must be a positive integer, got {raw!r}"
        ) from exc
    if value < 1:
        raise MachineValidationError(f"{BUDGET_ENV_VAR} must be a positive integer")
    return value
