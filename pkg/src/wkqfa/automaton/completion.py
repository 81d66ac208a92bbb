"""Completion of partially specified operators.

Every zero column of a materialized operator is redirected to a fresh rejecting
state, and every pair the heads can read is materialized. Only declared states
are completed; fresh states keep empty columns and are reported by
:func:`wkqfa.automaton.wellformed.extend_to_unitary` instead.
"""

from __future__ import annotations

import logging
import math
from dataclasses import replace

from ..config.amplitude import DEFAULT_TOL
from ..errors import CompletionError
from .model import Column, MachineDef, OperatorTable, SymbolPair

logger = logging.getLogger(__name__)


def fresh_reject_name(state: str, pair: SymbolPair, taken: set[str]) -> str:
    """Return a state name for the zero column of ``state`` under ``pair``."""

    name = f"q_rej<{state},{pair[0]},{pair[1]}>"
    while name in taken:
        name += "'"
    return name


def column_norm(column: Column) -> float:
    return math.sqrt(sum(abs(amp) ** 2 for amp in column.values()))


def inner_product(left: Column, right: Column) -> complex:
    """Return ``<left|right>`` of two sparse columns."""

    return sum(
        (left[target].conjugate() * amp for target, amp in right.items() if target in left),
        start=0j,
    )


def complete_operators(
    m: MachineDef, *, strict: bool = True, tol: float = DEFAULT_TOL
) -> MachineDef:
    """Return ``m`` with every readable operator materialized and zero columns filled.

    With ``strict`` a column whose norm is neither 0 nor 1, or two non-orthogonal
    columns of one operator, raise :class:`CompletionError`. Without it those
    columns are left untouched so the well-formedness report can show them.
    Completing an already completed machine returns it unchanged.
    """

    if m.completed:
        return m

    operators: OperatorTable = {
        pair: {source: dict(column) for source, column in table.items()}
        for pair, table in m.operators.items()
    }
    for pair in m.readable_pairs():
        operators.setdefault(pair, {})

    states = list(m.states)
    taken = set(states)
    rejecting = set(m.rejecting)
    directions = dict(m.directions)
    filled = 0

    for pair, table in operators.items():
        for state in m.declared_states:
            column = table.get(state, {})
            norm = column_norm(column)
            if norm <= tol:
                fresh = fresh_reject_name(state, pair, taken)
                taken.add(fresh)
                states.append(fresh)
                rejecting.add(fresh)
                directions[fresh] = (0, 0)
                table[state] = {fresh: 1 + 0j}
                filled += 1
            elif strict and abs(norm - 1.0) > tol:
                raise CompletionError(
                    f"Column of '{state}' in U_{{{pair[0]},{pair[1]}}} has norm "
                    f"{norm:.6g}; expected 0 or 1"
                )
        if strict:
            _check_orthogonal(pair, table, m.declared_states, tol)

    logger.debug(
        "Completed %d operators; %d zero columns sent to fresh rejecting states",
        len(operators),
        filled,
    )
    return replace(
        m,
        states=tuple(states),
        rejecting=frozenset(rejecting),
        operators=operators,
        directions=directions,
        declared_states=m.declared_states,
        completed=True,
    )


def _check_orthogonal(
    pair: SymbolPair, table: dict[str, Column], declared: tuple[str, ...], tol: float
) -> None:
    for index, first in enumerate(declared):
        for second in declared[index + 1 :]:
            overlap = inner_product(table[first], table[second])
            if abs(overlap) > tol:
                raise CompletionError(
                    f"Columns of '{first}' and '{second}' in U_{{{pair[0]},{pair[1]}}} "
                    f"are not orthogonal (|<.|.>| = {abs(overlap):.6g})"
                )
