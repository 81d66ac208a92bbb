"""Classical two-head automaton for machines whose columns are basis vectors."""

from __future__ import annotations

from collections.abc import Sequence
from enum import StrEnum

from ..automaton.model import MachineDef
from ..config.amplitude import DEFAULT_TOL
from ..errors import HeadOverrunError, MachineValidationError
from ..tape.strands import make_tapes


class ClassicalVerdict(StrEnum):
    ACCEPT = "accept"
    REJECT = "reject"
    LOOP = "loop"


def classical_run(
    m: MachineDef, w1: Sequence[str], w2: Sequence[str], tol: float = DEFAULT_TOL
) -> ClassicalVerdict:
    """Follow the unique successor of each configuration until a halting state.

    Missing operators and zero columns reject. Revisiting a configuration is a
    loop and never accepts.

    Raises:
        MachineValidationError: if a column that is read is not a phase times a
            basis vector.
        HeadOverrunError: if a head moves past '$'.
    """

    tapes = make_tapes(w1, w2)
    state, upos, lpos = m.start, 0, 0
    visited: set[tuple[str, int, int]] = set()
    while True:
        if state in m.accepting:
            return ClassicalVerdict.ACCEPT
        if state in m.rejecting:
            return ClassicalVerdict.REJECT
        if (state, upos, lpos) in visited:
            return ClassicalVerdict.LOOP
        visited.add((state, upos, lpos))

        pair = (tapes.upper[upos], tapes.lower[lpos])
        column = {
            target: amp
            for target, amp in m.operators.get(pair, {}).get(state, {}).items()
            if abs(amp) > tol
        }
        if not column:
            return ClassicalVerdict.REJECT
        if len(column) != 1:
            raise MachineValidationError(
                f"Column of '{state}' in U_{{{pair[0]},{pair[1]}}} is a superposition"
            )
        ((target, amp),) = column.items()
        if abs(abs(amp) - 1.0) > tol:
            raise MachineValidationError(
                f"Column of '{state}' in U_{{{pair[0]},{pair[1]}}} is not a unit vector"
            )
        d1, d2 = m.directions[target]
        state, upos, lpos = target, upos + d1, lpos + d2
        if upos >= len(tapes.upper) or lpos >= len(tapes.lower):
            raise HeadOverrunError(f"Head moved past '$' entering '{target}'")
