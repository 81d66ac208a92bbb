"""Translate a DFA into a WKQFA that guesses the transition sequence on its lower strand.

The i-th transition reading ``x`` (in state-then-symbol order) becomes the lower
symbol ``x<i>``; the complementarity relation pairs ``x`` with every ``x<i>``.
One complementary strand spells the DFA run exactly, every other strand hits a
zero column and is rejected by completion.

Each final state gets its own accepting state ``q_acc<q>`` so the ``($, $)``
columns stay orthogonal; with at most one final state it is plain ``q_acc``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..automaton.model import (
    Alphabet,
    ComplementarityRelation,
    EntryKey,
    MachineDef,
    OperatorTable,
)
from ..config.models import LEFT_END, RIGHT_END
from .dfa import DfaDef

logger = logging.getLogger(__name__)

ACCEPT_STATE = "q_acc"


@dataclass(frozen=True, slots=True)
class CompileSummary:
    """Sizes of the compiled machine: ``|V'|``, ``|rho|`` and ``|Q'|``."""

    alphabet_size: int
    rho_size: int
    states: int

    def describe(self) -> str:
        return f"|V'| = {self.alphabet_size}, |rho| = {self.rho_size}, |Q'| = {self.states}"


def _fresh(base: str, taken: set[str]) -> str:
    name = base
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def _accept_states(finals: list[str], taken: set[str]) -> tuple[tuple[str, ...], dict[str, str]]:
    if len(finals) > 1:
        accept_of = {state: _fresh(f"{ACCEPT_STATE}<{state}>", taken) for state in finals}
        return tuple(accept_of.values()), accept_of
    accept = _fresh(ACCEPT_STATE, taken)
    return (accept,), {state: accept for state in finals}


def compile_dfa(d: DfaDef) -> MachineDef:
    """Return the uncompleted WKQFA accepting the language of ``d``."""

    taken_states = set(d.states)
    start = _fresh(f"{d.start}'", taken_states)
    finals = [state for state in d.states if state in d.final]
    accepting, accept_of = _accept_states(finals, taken_states)

    taken_symbols = set(d.alphabet)
    numbered: dict[str, list[tuple[str, str, str]]] = {symbol: [] for symbol in d.alphabet}
    for state in d.states:
        for symbol in d.alphabet:
            index = len(numbered[symbol]) + 1
            lower = _fresh(f"{symbol}{index}", taken_symbols)
            numbered[symbol].append((lower, state, d.delta[(state, symbol)]))

    symbols: list[str] = []
    rho: list[tuple[str, str]] = []
    for symbol in d.alphabet:
        symbols.append(symbol)
        for lower, _, _ in numbered[symbol]:
            symbols.append(lower)
            rho.append((symbol, lower))

    operators: OperatorTable = {}
    expressions: dict[EntryKey, str] = {}

    def emit(upper: str, lower: str, source: str, target: str) -> None:
        operators.setdefault((upper, lower), {})[source] = {target: 1 + 0j}
        expressions[(upper, lower, source, target)] = "1"

    emit(LEFT_END, LEFT_END, start, d.start)
    for symbol in d.alphabet:
        for lower, source, target in numbered[symbol]:
            emit(symbol, lower, source, target)
    for state in finals:
        emit(RIGHT_END, RIGHT_END, state, accept_of[state])

    states = (*d.states, start, *accepting)
    directions = {state: (1, 1) for state in states}
    for state in accepting:
        directions[state] = (0, 0)
    machine = MachineDef(
        states=states,
        alphabet=Alphabet(tuple(symbols)),
        rho=ComplementarityRelation(tuple(rho)),
        start=start,
        accepting=frozenset(accepting),
        rejecting=frozenset(),
        operators=operators,
        directions=directions,
        expressions=expressions,
    )
    logger.debug("Compiled DFA with %d states: %s", len(d.states), summarize(machine).describe())
    return machine


def summarize(m: MachineDef) -> CompileSummary:
    return CompileSummary(
        alphabet_size=len(m.alphabet.symbols),
        rho_size=len(m.rho.pairs),
        states=len(m.declared_states),
    )
