"""Strict Pydantic models for the machine and DFA JSON file formats."""

from __future__ import annotations

from collections import Counter

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..errors import AmplitudeSyntaxError
from .amplitude import parse_amplitude

LEFT_END = "#"
RIGHT_END = "$"
ENDMARKERS = (LEFT_END, RIGHT_END)


def _validate_symbols(values: list[str], *, field_name: str) -> list[str]:
    """Validate a list of distinct, non-empty, non-endmarker symbols."""

    for value in values:
        if not value:
            raise ValueError(f"{field_name} entries must be non-empty strings")
        if value in ENDMARKERS:
            raise ValueError(f"{field_name} must not contain the endmarker {value!r}")
    duplicates = sorted(name for name, count in Counter(values).items() if count > 1)
    if duplicates:
        raise ValueError(f"{field_name} contains duplicates: {', '.join(duplicates)}")
    return values


def _validate_names(values: list[str], *, field_name: str) -> list[str]:
    """Validate a list of distinct non-empty state names."""

    for value in values:
        if not value.strip():
            raise ValueError(f"{field_name} entries must be non-empty strings")
    duplicates = sorted(name for name, count in Counter(values).items() if count > 1)
    if duplicates:
        raise ValueError(f"{field_name} contains duplicates: {', '.join(duplicates)}")
    return values


class OperatorEntryModel(BaseModel):
    """One matrix entry ``<to|U|from> = amp``."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    source: str = Field(alias="from", min_length=1)
    target: str = Field(alias="to", min_length=1)
    amp: str = Field(min_length=1)

    @field_validator("amp")
    @classmethod
    def _validate_amp(cls, value: str) -> str:
        try:
            parse_amplitude(value)
        except AmplitudeSyntaxError as exc:
            raise ValueError(exc.message) from exc
        return value


class OperatorModel(BaseModel):
    """The specified entries of one operator ``U_{upper,lower}``."""

    model_config = ConfigDict(extra="forbid")

    upper: str = Field(min_length=1)
    lower: str = Field(min_length=1)
    entries: list[OperatorEntryModel] = Field(default_factory=list)


class MachineFile(BaseModel):
    """Root model of a machine definition file."""

    model_config = ConfigDict(extra="forbid")

    states: list[str] = Field(min_length=1)
    start: str = Field(min_length=1)
    accept: list[str] = Field(default_factory=list)
    reject: list[str] = Field(default_factory=list)
    alphabet: list[str]
    rho: list[tuple[str, str]]
    directions: dict[str, tuple[int, int]]
    operators: list[OperatorModel] = Field(default_factory=list)

    @field_validator("states")
    @classmethod
    def _validate_states(cls, value: list[str]) -> list[str]:
        return _validate_names(value, field_name="states")

    @field_validator("alphabet")
    @classmethod
    def _validate_alphabet(cls, value: list[str]) -> list[str]:
        return _validate_symbols(value, field_name="alphabet")

    @field_validator("directions")
    @classmethod
    def _validate_direction_values(
        cls, value: dict[str, tuple[int, int]]
    ) -> dict[str, tuple[int, int]]:
        for state, (d1, d2) in value.items():
            if d1 not in (0, 1) or d2 not in (0, 1):
                raise ValueError(f"directions.{state} must be a pair of 0/1 values")
        return value

    @model_validator(mode="after")
    def _validate_references(self) -> MachineFile:
        states = set(self.states)
        symbols = set(self.alphabet)
        gamma = symbols | set(ENDMARKERS)

        if self.start not in states:
            raise ValueError(f"start references unknown state '{self.start}'")
        for field_name in ("accept", "reject"):
            for state in getattr(self, field_name):
                if state not in states:
                    raise ValueError(f"{field_name} references unknown state '{state}'")
        overlap = sorted(set(self.accept) & set(self.reject))
        if overlap:
            raise ValueError(f"accept and reject overlap: {', '.join(overlap)}")

        for index, (upper, lower) in enumerate(self.rho):
            for symbol in (upper, lower):
                if symbol not in symbols:
                    raise ValueError(f"rho[{index}] references unknown symbol '{symbol}'")
        if len(set(self.rho)) != len(self.rho):
            raise ValueError("rho contains duplicate pairs")

        unknown = sorted(set(self.directions) - states)
        if unknown:
            raise ValueError(f"directions reference unknown states: {', '.join(unknown)}")
        missing = [state for state in self.states if state not in self.directions]
        if missing:
            raise ValueError(f"directions missing for states: {', '.join(missing)}")

        seen: set[tuple[str, str, str, str]] = set()
        for index, operator in enumerate(self.operators):
            for symbol in (operator.upper, operator.lower):
                if symbol not in gamma:
                    raise ValueError(
                        f"operators[{index}] references unknown symbol '{symbol}'"
                    )
            for entry in operator.entries:
                for state in (entry.source, entry.target):
                    if state not in states:
                        raise ValueError(
                            f"operators[{index}] references unknown state '{state}'"
                        )
                key = (operator.upper, operator.lower, entry.source, entry.target)
                if key in seen:
                    raise ValueError(
                        "duplicate operator entry for "
                        f"U_{{{operator.upper},{operator.lower}}} "
                        f"{entry.source} -> {entry.target}"
                    )
                seen.add(key)
        return self


class DfaTransitionModel(BaseModel):
    """One DFA transition ``delta(from, on) = to``."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    source: str = Field(alias="from", min_length=1)
    symbol: str = Field(alias="on", min_length=1)
    target: str = Field(alias="to", min_length=1)


class DfaFile(BaseModel):
    """Root model of a DFA definition file; the transition function must be total."""

    model_config = ConfigDict(extra="forbid")

    states: list[str] = Field(min_length=1)
    alphabet: list[str]
    start: str = Field(min_length=1)
    final: list[str] = Field(default_factory=list)
    delta: list[DfaTransitionModel] = Field(default_factory=list)

    @field_validator("states")
    @classmethod
    def _validate_states(cls, value: list[str]) -> list[str]:
        return _validate_names(value, field_name="states")

    @field_validator("alphabet")
    @classmethod
    def _validate_alphabet(cls, value: list[str]) -> list[str]:
        return _validate_symbols(value, field_name="alphabet")

    @model_validator(mode="after")
    def _validate_total(self) -> DfaFile:
        states = set(self.states)
        symbols = set(self.alphabet)
        if self.start not in states:
            raise ValueError(f"start references unknown state '{self.start}'")
        for state in self.final:
            if state not in states:
                raise ValueError(f"final references unknown state '{state}'")

        defined: set[tuple[str, str]] = set()
        for index, transition in enumerate(self.delta):
            if transition.source not in states or transition.target not in states:
                raise ValueError(f"delta[{index}] references an unknown state")
            if transition.symbol not in symbols:
                raise ValueError(
                    f"delta[{index}] references unknown symbol '{transition.symbol}'"
                )
            key = (transition.source, transition.symbol)
            if key in defined:
                raise ValueError(
                    f"delta defines ({transition.source}, {transition.symbol}) twice"
                )
            defined.add(key)

        missing = [
            f"({state}, {symbol})"
            for state in self.states
            for symbol in self.alphabet
            if (state, symbol) not in defined
        ]
        if missing:
            raise ValueError(f"delta is not total, missing: {', '.join(missing)}")
        return self
