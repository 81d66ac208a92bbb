"""The WKQFA data model: states, alphabet, complementarity relation, operators."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any

from ..config.amplitude import parse_amplitude
from ..config.loaders import parse_machine_document
from ..config.models import LEFT_END, RIGHT_END, MachineFile
from ..errors import MachineValidationError

SymbolPair = tuple[str, str]
Direction = tuple[int, int]
Column = dict[str, complex]
OperatorTable = dict[SymbolPair, dict[str, Column]]
EntryKey = tuple[str, str, str, str]


@dataclass(frozen=True, slots=True)
class Alphabet:
    """Input alphabet V; the working alphabet adds both endmarkers."""

    symbols: tuple[str, ...]

    @property
    def gamma(self) -> tuple[str, ...]:
        """Return the working alphabet ``V ∪ {#, $}``."""

        return (LEFT_END, *self.symbols, RIGHT_END)


@dataclass(frozen=True, slots=True)
class ComplementarityRelation:
    """Ordered set of allowed (upper, lower) symbol pairings."""

    pairs: tuple[SymbolPair, ...]

    def complements_of(self, upper: str) -> tuple[str, ...]:
        """Return the lower complements of ``upper`` in declaration order."""

        return tuple(lower for first, lower in self.pairs if first == upper)

    def contains(self, upper: str, lower: str) -> bool:
        """Return True when ``(upper, lower)`` is an allowed pairing."""

        return (upper, lower) in self.pairs

    @property
    def upper_symbols(self) -> tuple[str, ...]:
        """Symbols that occur as first components, in first-seen order."""

        return tuple(dict.fromkeys(upper for upper, _ in self.pairs))

    @property
    def lower_symbols(self) -> tuple[str, ...]:
        """Symbols that occur as second components, in first-seen order."""

        return tuple(dict.fromkeys(lower for _, lower in self.pairs))

    @property
    def is_injective(self) -> bool:
        """One complement per upper symbol and no lower symbol shared."""

        uppers = [upper for upper, _ in self.pairs]
        lowers = [lower for _, lower in self.pairs]
        return len(set(uppers)) == len(uppers) and len(set(lowers)) == len(lowers)


@dataclass(frozen=True, slots=True)
class DeltaEntry:
    """One nonzero value of the transition function for a fixed (q, σ, τ)."""

    target: str
    d1: int
    d2: int
    amp: complex


@dataclass(frozen=True, slots=True)
class MachineDef:
    """A Watson-Crick quantum finite automaton.

    ``operators`` maps each materialized symbol pair to its columns: the column of
    a source state is a sparse ``target -> amplitude`` mapping, so ``U|q>`` reads
    ``operators[pair][q]``. ``declared_states`` are the states of the definition;
    completion appends fresh rejecting states after them.
    """

    states: tuple[str, ...]
    alphabet: Alphabet
    rho: ComplementarityRelation
    start: str
    accepting: frozenset[str]
    rejecting: frozenset[str]
    operators: OperatorTable
    directions: dict[str, Direction]
    expressions: dict[EntryKey, str] = field(default_factory=dict)
    declared_states: tuple[str, ...] = ()
    completed: bool = False

    def __post_init__(self) -> None:
        if not self.declared_states:
            object.__setattr__(self, "declared_states", self.states)

    @property
    def non_halting(self) -> frozenset[str]:
        """Return ``Q_non = Q - (Q_acc ∪ Q_rej)``."""

        return frozenset(self.states) - self.accepting - self.rejecting

    def is_halting(self, state: str) -> bool:
        """Return True for accepting or rejecting states."""

        return state in self.accepting or state in self.rejecting

    def readable_pairs(self) -> list[SymbolPair]:
        """Every (upper, lower) pair a head pair can read on some complementary tape."""

        uppers = (LEFT_END, *self.rho.upper_symbols, RIGHT_END)
        lowers = (LEFT_END, *self.rho.lower_symbols, RIGHT_END)
        return [(upper, lower) for upper in uppers for lower in lowers]

    def column(self, state: str, upper: str, lower: str) -> Column | None:
        """Return ``U_{upper,lower}|state>`` or None when the operator is absent."""

        table = self.operators.get((upper, lower))
        if table is None:
            return None
        return table.get(state, {})


def load_machine(document: str | Mapping[str, Any] | MachineFile) -> MachineDef:
    """Build an uncompleted machine from a machine-file document."""

    model = parse_machine_document(document)
    operators: OperatorTable = {}
    expressions: dict[EntryKey, str] = {}
    for operator in model.operators:
        table = operators.setdefault((operator.upper, operator.lower), {})
        for entry in operator.entries:
            table.setdefault(entry.source, {})[entry.target] = parse_amplitude(entry.amp)
            expressions[(operator.upper, operator.lower, entry.source, entry.target)] = (
                entry.amp
            )
    states = tuple(model.states)
    return MachineDef(
        states=states,
        alphabet=Alphabet(tuple(model.alphabet)),
        rho=ComplementarityRelation(tuple((upper, lower) for upper, lower in model.rho)),
        start=model.start,
        accepting=frozenset(model.accept),
        rejecting=frozenset(model.reject),
        operators=operators,
        directions={state: (d1, d2) for state, (d1, d2) in model.directions.items()},
        expressions=expressions,
        declared_states=states,
    )


def machine_to_document(m: MachineDef) -> dict[str, Any]:
    """Return the machine-file document of ``m`` (declared part only)."""

    declared = set(m.declared_states)
    operators: list[dict[str, Any]] = []
    by_pair: dict[SymbolPair, list[dict[str, str]]] = {}
    for (upper, lower, source, target), expr in m.expressions.items():
        if source in declared and target in declared:
            by_pair.setdefault((upper, lower), []).append(
                {"from": source, "to": target, "amp": expr}
            )
    for pair, entries in by_pair.items():
        operators.append({"upper": pair[0], "lower": pair[1], "entries": entries})
    return {
        "states": list(m.declared_states),
        "start": m.start,
        "accept": [state for state in m.declared_states if state in m.accepting],
        "reject": [state for state in m.declared_states if state in m.rejecting],
        "alphabet": list(m.alphabet.symbols),
        "rho": [[upper, lower] for upper, lower in m.rho.pairs],
        "directions": {state: list(m.directions[state]) for state in m.declared_states},
        "operators": operators,
    }


def derive_delta(m: MachineDef, state: str, upper: str, lower: str) -> list[DeltaEntry]:
    """Return the nonzero entries of column ``(upper, lower, state)`` tagged with D.

    Raises:
        MachineValidationError: for an unknown state, symbol, or operator.
    """

    if state not in m.directions:
        raise MachineValidationError(f"Unknown state '{state}'")
    gamma = m.alphabet.gamma
    for symbol in (upper, lower):
        if symbol not in gamma:
            raise MachineValidationError(f"Unknown symbol '{symbol}'")
    column = m.column(state, upper, lower)
    if column is None:
        raise MachineValidationError(f"No operator U_{{{upper},{lower}}} in machine")
    order = {name: index for index, name in enumerate(m.states)}
    entries = []
    for target in sorted(column, key=order.__getitem__):
        amp = column[target]
        if amp == 0:
            continue
        d1, d2 = m.directions[target]
        entries.append(DeltaEntry(target=target, d1=d1, d2=d2, amp=amp))
    return entries


def is_strong(m: MachineDef) -> bool:
    """Return True when the complementarity relation is injective."""

    return m.rho.is_injective
