"""Dataclasses that describe configurations, run outcomes, policies, and decisions."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import StrEnum
from typing import NamedTuple

from ..config.amplitude import DEFAULT_TOL
from ..errors import MachineValidationError
from ..tape.strands import Strand


class Configuration(NamedTuple):
    """A state together with both head positions (0 reads '#')."""

    state: str
    upos: int
    lpos: int


Superposition = dict[Configuration, complex]


class HaltReason(StrEnum):
    ALL_HALTED = "all-halted"
    STEP_CAP = "step-cap"
    HEAD_OVERRUN = "head-overrun"


class PolicyMode(StrEnum):
    CERTAIN = "exists-strand-certain"
    CUTPOINT = "exists-strand-cutpoint"
    BOUNDED_ERROR = "bounded-error"


@dataclass(frozen=True, slots=True)
class StepRecord:
    """Residual superposition and halting mass observed after one step."""

    step: int
    dp_acc: float
    dp_rej: float
    configs: tuple[tuple[Configuration, complex], ...]

    def to_json_line(self) -> str:
        """Return the record as one JSON line of the trace stream."""

        payload = {
            "step": self.step,
            "dp_acc": self.dp_acc,
            "dp_rej": self.dp_rej,
            "configs": [
                {
                    "state": config.state,
                    "upos": config.upos,
                    "lpos": config.lpos,
                    "re": amp.real,
                    "im": amp.imag,
                }
                for config, amp in self.configs
            ],
        }
        return json.dumps(payload, separators=(", ", ": "))


@dataclass(frozen=True, slots=True)
class HistoryPoint:
    """Cumulative probabilities after one step."""

    step: int
    p_acc: float
    p_rej: float
    residual: float


@dataclass(slots=True)
class RunOutcome:
    """Result of running one (upper, lower) strand pair."""

    p_acc: float
    p_rej: float
    p_residual: float
    steps: int
    halt_reason: HaltReason
    witness_trace: list[StepRecord] | None = None
    norm_anomalies: list[int] = field(default_factory=list)
    history: list[HistoryPoint] = field(default_factory=list)

    @property
    def total(self) -> float:
        return self.p_acc + self.p_rej + self.p_residual


@dataclass(frozen=True, slots=True)
class AcceptancePolicy:
    """How a word's strands are turned into a yes/no decision."""

    mode: PolicyMode = PolicyMode.CERTAIN
    theta: float | None = None

    def __post_init__(self) -> None:
        if self.mode is PolicyMode.CUTPOINT:
            if self.theta is None or not 0 < self.theta <= 1:
                raise MachineValidationError("cutpoint policy needs 0 < theta <= 1")
        elif self.theta is not None:
            raise MachineValidationError(f"theta only applies to the {PolicyMode.CUTPOINT} policy")

    @classmethod
    def from_name(cls, name: str, theta: float | None = None) -> AcceptancePolicy:
        """Build a policy from its CLI name; ``cutpoint`` is accepted as a short form."""

        aliases = {"certain": PolicyMode.CERTAIN, "cutpoint": PolicyMode.CUTPOINT}
        try:
            mode = aliases.get(name) or PolicyMode(name)
        except ValueError as exc:
            choices = ", ".join(mode.value for mode in PolicyMode)
            raise MachineValidationError(
                f"Unknown policy '{name}'. Choose one of: {choices}"
            ) from exc
        return cls(mode=mode, theta=theta)

    def accepts(self, p_acc: float, tol: float = DEFAULT_TOL) -> bool:
        """Return True when one strand's acceptance probability meets the bar."""

        if self.mode is PolicyMode.CUTPOINT:
            assert self.theta is not None
            return p_acc >= self.theta - tol
        return p_acc >= 1.0 - tol

    @property
    def label(self) -> str:
        if self.mode is PolicyMode.CUTPOINT:
            return f"{self.mode.value}({self.theta:g})"
        return self.mode.value


@dataclass(frozen=True, slots=True)
class Decision:
    """Exists-strand decision for one upper word.

    ``error_bound_holds`` is only set by the bounded-error policy on rejected
    words: True when every strand rejects with probability at least 1/2.
    """

    accepted: bool
    witness: Strand | None
    best_p_acc: float
    strands_examined: int
    error_bound_holds: bool | None = None


@dataclass(frozen=True, slots=True)
class SweepRow:
    """One row of a language sweep; ``error`` is set when the word was not decided."""

    word: Strand
    accepted: bool
    best_p_acc: float
    strands_examined: int
    witness: Strand | None = None
    error: str | None = None
