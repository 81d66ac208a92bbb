"""Deterministic finite automata: the classical input of the compiler."""

from __future__ import annotations

import random
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from ..config.loaders import parse_dfa_document, read_dfa_file
from ..config.models import DfaFile
from ..errors import WordError


@dataclass(frozen=True, slots=True)
class DfaDef:
    """A total DFA; ``states`` and ``alphabet`` keep their declaration order."""

    states: tuple[str, ...]
    alphabet: tuple[str, ...]
    delta: dict[tuple[str, str], str]
    start: str
    final: frozenset[str]


def _from_model(model: DfaFile) -> DfaDef:
    return DfaDef(
        states=tuple(model.states),
        alphabet=tuple(model.alphabet),
        delta={(item.source, item.symbol): item.target for item in model.delta},
        start=model.start,
        final=frozenset(model.final),
    )


def load_dfa(document: str | Mapping[str, Any] | DfaFile) -> DfaDef:
    """Build a DFA from a DFA document; partial transition functions are rejected."""

    return _from_model(parse_dfa_document(document))


def read_dfa(path: Path) -> DfaDef:
    """Load a DFA file from disk."""

    return _from_model(read_dfa_file(path))


def dfa_to_document(d: DfaDef) -> dict[str, Any]:
    return {
        "states": list(d.states),
        "alphabet": list(d.alphabet),
        "start": d.start,
        "final": [state for state in d.states if state in d.final],
        "delta": [
            {"from": state, "on": symbol, "to": d.delta[(state, symbol)]}
            for state in d.states
            for symbol in d.alphabet
        ],
    }


def dfa_run(d: DfaDef, word: Sequence[str]) -> bool:
    """Return True when ``d`` accepts ``word``.

    Raises:
        WordError: if ``word`` contains a symbol outside the DFA alphabet.
    """

    state = d.start
    for symbol in word:
        if symbol not in d.alphabet:
            raise WordError(f"Symbol '{symbol}' is not in the DFA alphabet", symbol=symbol)
        state = d.delta[(state, symbol)]
    return state in d.final


def random_dfa(
    rng: random.Random, *, max_states: int = 4, alphabet: tuple[str, ...] = ("a", "b")
) -> DfaDef:
    """Return a random total DFA with between 1 and ``max_states`` states."""

    states = tuple(f"s{index}" for index in range(rng.randint(1, max_states)))
    delta = {(state, symbol): rng.choice(states) for state in states for symbol in alphabet}
    final = frozenset(state for state in states if rng.random() < 0.5)
    return DfaDef(states=states, alphabet=alphabet, delta=delta, start=states[0], final=final)
