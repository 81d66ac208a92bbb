"""Exists-strand acceptance decisions and language sweeps."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

from ..automaton.completion import complete_operators
from ..automaton.model import MachineDef
from ..config.options import RunOptions
from ..errors import HeadOverrunError, StrandBudgetExceeded
from ..tape.strands import (
    Strand,
    check_strand_budget,
    complements,
    format_word,
    strand_at,
)
from .engine import run_strand
from .models import AcceptancePolicy, Decision, HaltReason, PolicyMode, RunOutcome, SweepRow

logger = logging.getLogger(__name__)

SHARD_SIZE = 64


def upper_alphabet(m: MachineDef) -> tuple[str, ...]:
    """Upper-strand symbols in declared alphabet order.

    Only symbols with at least one complement are kept; the rest cannot start a
    complementary pair.
    """

    uppers = set(m.rho.upper_symbols)
    return tuple(symbol for symbol in m.alphabet.symbols if symbol in uppers)


def words_up_to(symbols: Sequence[str], max_len: int) -> Iterator[Strand]:
    """Yield every word of length at most ``max_len`` in length-then-lex order."""

    for length in range(max_len + 1):
        yield from itertools.product(symbols, repeat=length)


def _run_range(task: tuple[MachineDef, Strand, int, int, RunOptions]) -> list[RunOutcome]:
    m, w1, start, stop, options = task
    return [
        run_strand(m, w1, strand_at(w1, m.rho, index), options) for index in range(start, stop)
    ]


def _outcomes(
    m: MachineDef, w1: Strand, total: int, options: RunOptions
) -> Iterator[RunOutcome]:
    serial = replace(options, jobs=1)
    if options.jobs <= 1 or total <= SHARD_SIZE:
        for w2 in complements(w1, m.rho):
            yield run_strand(m, w1, w2, serial)
        return
    shards = (
        (m, w1, start, min(start + SHARD_SIZE, total), serial)
        for start in range(0, total, SHARD_SIZE)
    )
    executor = ProcessPoolExecutor(max_workers=options.jobs)
    try:
        for outcomes in executor.map(_run_range, shards):
            yield from outcomes
    finally:
        executor.shutdown(wait=True, cancel_futures=True)


def accepts(
    m: MachineDef,
    w1: Sequence[str],
    policy: AcceptancePolicy | None = None,
    options: RunOptions | None = None,
) -> Decision:
    """Decide ``w1`` by enumerating its complementary strands.

    The witness is the first strand, in enumeration order, whose acceptance
    probability meets the policy; enumeration stops there. Under the
    bounded-error policy a rejected word also records whether every strand
    rejected with probability at least 1/2.

    Raises:
        StrandBudgetExceeded: if ``w1`` has more strands than the budget allows.
        HeadOverrunError: if any strand run moves a head past '$'.
    """

    policy = policy or AcceptancePolicy()
    opts = options or RunOptions()
    machine = m if m.completed else complete_operators(m)
    word = tuple(w1)
    total = check_strand_budget(word, machine.rho, opts.strand_budget)

    best = 0.0
    bound_holds = True
    for index, outcome in enumerate(_outcomes(machine, word, total, opts)):
        if outcome.halt_reason is HaltReason.HEAD_OVERRUN:
            lower = format_word(strand_at(word, machine.rho, index))
            raise HeadOverrunError(
                f"Head moved past '$' on '{format_word(word)}' / '{lower}'",
                upper=format_word(word),
                lower=lower,
            )
        best = max(best, outcome.p_acc)
        if outcome.p_rej < 0.5 - opts.tol:
            bound_holds = False
        if policy.accepts(outcome.p_acc, opts.tol):
            return Decision(
                accepted=True,
                witness=strand_at(word, machine.rho, index),
                best_p_acc=best,
                strands_examined=index + 1,
            )

    error_bound: bool | None = None
    if policy.mode is PolicyMode.BOUNDED_ERROR:
        error_bound = bound_holds
        if not bound_holds:
            logger.warning(
                "Bounded-error guarantee violated on '%s': some strand rejects below 1/2",
                format_word(word),
            )
    return Decision(
        accepted=False,
        witness=None,
        best_p_acc=best,
        strands_examined=total,
        error_bound_holds=error_bound,
    )


def _sweep_row(task: tuple[MachineDef, Strand, AcceptancePolicy, RunOptions]) -> SweepRow:
    m, word, policy, options = task
    try:
        decision = accepts(m, word, policy, options)
    except StrandBudgetExceeded as exc:
        return SweepRow(
            word=word, accepted=False, best_p_acc=0.0, strands_examined=0, error=exc.message
        )
    return SweepRow(
        word=word,
        accepted=decision.accepted,
        best_p_acc=decision.best_p_acc,
        strands_examined=decision.strands_examined,
        witness=decision.witness,
    )


def language_sweep(
    m: MachineDef,
    max_len: int,
    policy: AcceptancePolicy | None = None,
    options: RunOptions | None = None,
) -> list[SweepRow]:
    """Decide every upper word of length at most ``max_len``.

    Words whose strand count exceeds the budget are reported inline with
    ``error`` set instead of aborting the sweep.
    """

    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    policy = policy or AcceptancePolicy()
    opts = options or RunOptions()
    machine = m if m.completed else complete_operators(m)
    serial = replace(opts, jobs=1)
    words = words_up_to(upper_alphabet(machine), max_len)
    tasks = [(machine, word, policy, serial) for word in words]
    logger.info("Sweeping %d words up to length %d (%s)", len(tasks), max_len, policy.label)
    if opts.jobs <= 1:
        return [_sweep_row(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=opts.jobs) as executor:
        return list(executor.map(_sweep_row, tasks, chunksize=8))
