"""Dense matrix-vector simulation used to cross-check the sparse engine.

The transition of one step is a single matrix from the non-halting
configuration space into every configuration reachable in one move. Its rows
are indexed lazily, so halting configurations only exist when some column
reaches them.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from ..automaton.completion import complete_operators
from ..automaton.model import MachineDef
from ..config.options import HALT_THRESHOLD
from ..errors import HeadOverrunError
from ..tape.strands import make_tapes
from .engine import default_step_cap
from .models import Configuration, HaltReason, RunOutcome

_OVERRUN = Configuration("<overrun>", -1, -1)
_ABSENT = "<absent>"


def transition_matrix(
    m: MachineDef, upper: Sequence[str], lower: Sequence[str]
) -> tuple[np.ndarray, list[Configuration], int]:
    """Return ``(T, rows, n)``: the first ``n`` rows are the non-halting columns."""

    non_halting = [state for state in m.states if state not in m.accepting | m.rejecting]
    columns = [
        Configuration(state, i, j)
        for state in non_halting
        for i in range(len(upper))
        for j in range(len(lower))
    ]
    index = {config: position for position, config in enumerate(columns)}
    entries: list[tuple[Configuration, int, complex]] = []
    for col, config in enumerate(columns):
        table = m.operators.get((upper[config.upos], lower[config.lpos]), {})
        column = table.get(config.state, {})
        if not column:
            sink = Configuration(f"{_ABSENT}{config.state}", config.upos, config.lpos)
            entries.append((sink, col, 1 + 0j))
            continue
        for target, amp in column.items():
            d1, d2 = m.directions[target]
            upos, lpos = config.upos + d1, config.lpos + d2
            if upos >= len(upper) or lpos >= len(lower):
                entries.append((_OVERRUN, col, amp))
            else:
                entries.append((Configuration(target, upos, lpos), col, amp))

    rows = list(columns)
    for target, _, _ in entries:
        if target not in index:
            index[target] = len(rows)
            rows.append(target)
    matrix = np.zeros((len(rows), len(columns)), dtype=np.complex128)
    for target, col, amp in entries:
        matrix[index[target], col] += amp
    return matrix, rows, len(columns)


def dense_run(
    m: MachineDef, w1: Sequence[str], w2: Sequence[str], step_cap: int | None = None
) -> RunOutcome:
    """Run ``m`` on a strand pair by repeated matrix-vector products."""

    machine = m if m.completed else complete_operators(m)
    tapes = make_tapes(w1, w2)
    matrix, rows, size = transition_matrix(machine, tapes.upper, tapes.lower)
    accept_rows = np.array([row.state in machine.accepting for row in rows])
    reject_rows = np.array(
        [row.state in machine.rejecting or row.state.startswith(_ABSENT) for row in rows]
    )
    overrun_rows = np.array([row == _OVERRUN for row in rows])

    psi = np.zeros(size, dtype=np.complex128)
    psi[rows.index(Configuration(machine.start, 0, 0))] = 1.0
    cap = step_cap if step_cap is not None else default_step_cap(machine, w1, w2)
    p_acc = 0.0
    p_rej = 0.0
    steps = 0
    halt_reason = HaltReason.STEP_CAP
    while steps < cap:
        phi = matrix @ psi
        weights = np.abs(phi) ** 2
        if weights[overrun_rows].sum() > 0:
            raise HeadOverrunError("Head moved past '$' in dense simulation")
        steps += 1
        p_acc += float(weights[accept_rows].sum())
        p_rej += float(weights[reject_rows].sum())
        psi = phi[:size]
        if p_acc + p_rej >= 1.0 - HALT_THRESHOLD:
            halt_reason = HaltReason.ALL_HALTED
            break
    return RunOutcome(
        p_acc=p_acc,
        p_rej=p_rej,
        p_residual=float(np.sum(np.abs(psi) ** 2)),
        steps=steps,
        halt_reason=halt_reason,
    )
