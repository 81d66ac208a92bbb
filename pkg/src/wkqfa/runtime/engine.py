"""Sparse measure-many simulation over (state, upper head, lower head) configurations."""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Sequence
from dataclasses import dataclass

from ..automaton.completion import complete_operators
from ..automaton.model import MachineDef
from ..config.options import HALT_THRESHOLD, PRUNE_THRESHOLD, RunOptions
from ..errors import HeadOverrunError, WordError
from ..tape.strands import TapePair, format_word, is_complementary, make_tapes
from .models import (
    Configuration,
    HaltReason,
    HistoryPoint,
    RunOutcome,
    StepRecord,
    Superposition,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class StepResult:
    """Outcome of one evolve-and-measure step."""

    superposition: Superposition
    dp_acc: float
    dp_rej: float
    norm_change: float


def default_step_cap(m: MachineDef, w1: Sequence[str], w2: Sequence[str]) -> int:
    """Return ``4 * |Q| * (|w1| + 2) * (|w2| + 2)``."""

    return 4 * len(m.states) * (len(w1) + 2) * (len(w2) + 2)


def _norm(s: Superposition) -> float:
    return sum(abs(amp) ** 2 for amp in s.values())


def evolve(m: MachineDef, tapes: TapePair, s: Superposition) -> tuple[Superposition, float]:
    """Apply the operators read at every configuration.

    Returns the evolved superposition and the probability sent straight to
    rejection by absent operators or zero columns.

    Raises:
        HeadOverrunError: if nonzero amplitude moves a head past '$'.
    """

    evolved: defaultdict[Configuration, complex] = defaultdict(complex)
    absent = 0.0
    upper_len = len(tapes.upper)
    lower_len = len(tapes.lower)
    for config, amp in s.items():
        column = m.column(config.state, tapes.upper[config.upos], tapes.lower[config.lpos])
        if not column:
            absent += abs(amp) ** 2
            continue
        for target, coeff in column.items():
            value = amp * coeff
            if value == 0:
                continue
            d1, d2 = m.directions[target]
            upos = config.upos + d1
            lpos = config.lpos + d2
            if upos >= upper_len or lpos >= lower_len:
                raise HeadOverrunError(
                    f"Head moved past '$' entering '{target}' from {config}",
                    state=target,
                    upos=upos,
                    lpos=lpos,
                )
            evolved[Configuration(target, upos, lpos)] += value
    return dict(evolved), absent


def step(
    m: MachineDef,
    tapes: TapePair,
    s: Superposition,
    *,
    prune: float = PRUNE_THRESHOLD,
) -> StepResult:
    """Evolve ``s`` once and measure the halting subspaces.

    Halted configurations are removed and the residual is not renormalized.
    """

    evolved, dp_rej = evolve(m, tapes, s)
    norm_change = _norm(evolved) + dp_rej - _norm(s)
    dp_acc = 0.0
    residual: Superposition = {}
    for config, amp in evolved.items():
        weight = abs(amp) ** 2
        if config.state in m.accepting:
            dp_acc += weight
        elif config.state in m.rejecting:
            dp_rej += weight
        elif weight >= prune:
            residual[config] = amp
    return StepResult(superposition=residual, dp_acc=dp_acc, dp_rej=dp_rej, norm_change=norm_change)


def _ordered(m: MachineDef, s: Superposition) -> tuple[tuple[Configuration, complex], ...]:
    order = {state: index for index, state in enumerate(m.states)}
    return tuple(
        sorted(s.items(), key=lambda item: (order[item[0].state], item[0].upos, item[0].lpos))
    )


def run_strand(
    m: MachineDef,
    w1: Sequence[str],
    w2: Sequence[str],
    options: RunOptions | None = None,
) -> RunOutcome:
    """Run the machine on upper strand ``w1`` paired with lower strand ``w2``.

    The run starts from ``|start, 0, 0>`` and stops once the halted probability
    reaches ``1 - 1e-12`` or the step cap is hit; residual mass at the cap is
    reported, not folded into rejection.

    Raises:
        WordError: if ``w2`` is not complementary to ``w1``.
    """

    opts = options or RunOptions()
    if not is_complementary(w1, w2, m.rho):
        raise WordError(
            f"Lower strand '{format_word(w2)}' is not complementary to '{format_word(w1)}'",
            upper=format_word(w1),
            lower=format_word(w2),
        )
    machine = m if m.completed else complete_operators(m)
    tapes = make_tapes(w1, w2)
    cap = opts.step_cap if opts.step_cap is not None else default_step_cap(machine, w1, w2)

    trace: list[StepRecord] | None = [] if opts.trace else None
    history: list[HistoryPoint] = []
    anomalies: list[int] = []
    p_acc = 0.0
    p_rej = 0.0
    s: Superposition = {Configuration(machine.start, 0, 0): 1 + 0j}
    if machine.start in machine.accepting:
        return RunOutcome(1.0, 0.0, 0.0, 0, HaltReason.ALL_HALTED, trace, anomalies, history)
    if machine.start in machine.rejecting:
        return RunOutcome(0.0, 1.0, 0.0, 0, HaltReason.ALL_HALTED, trace, anomalies, history)

    steps = 0
    halt_reason = HaltReason.STEP_CAP
    while steps < cap:
        try:
            result = step(machine, tapes, s, prune=opts.prune)
        except HeadOverrunError as exc:
            logger.error("Run of '%s' / '%s': %s", format_word(w1), format_word(w2), exc)
            halt_reason = HaltReason.HEAD_OVERRUN
            break
        steps += 1
        s = result.superposition
        p_acc += result.dp_acc
        p_rej += result.dp_rej
        if abs(result.norm_change) > opts.norm_tol:
            anomalies.append(steps)
            logger.warning(
                "Norm anomaly at step %d on '%s' / '%s': change %.3g",
                steps,
                format_word(w1),
                format_word(w2),
                result.norm_change,
            )
        if trace is not None:
            trace.append(StepRecord(steps, result.dp_acc, result.dp_rej, _ordered(machine, s)))
            history.append(HistoryPoint(steps, p_acc, p_rej, _norm(s)))
        if not s or p_acc + p_rej >= 1.0 - HALT_THRESHOLD:
            halt_reason = HaltReason.ALL_HALTED
            break

    if halt_reason is HaltReason.STEP_CAP:
        logger.warning(
            "Step cap %d reached on '%s' / '%s' with residual %.3g",
            cap,
            format_word(w1),
            format_word(w2),
            _norm(s),
        )
    return RunOutcome(
        p_acc=p_acc,
        p_rej=p_rej,
        p_residual=_norm(s),
        steps=steps,
        halt_reason=halt_reason,
        witness_trace=trace,
        norm_anomalies=anomalies,
        history=history,
    )
