"""Rich tables and plain summaries for human-readable output."""

from __future__ import annotations

from collections.abc import Sequence
from typing import TextIO

from rich import box
from rich.console import Console
from rich.table import Table
from rich.text import Text

from ..automaton.model import MachineDef
from ..automaton.wellformed import WellFormedReport
from ..config.amplitude import format_amplitude
from ..runtime.models import Decision, RunOutcome, SweepRow
from ..tape.strands import Strand, format_word

EMPTY_WORD = "ε"


def probability(value: float) -> str:
    """Render a probability with nine fractional digits."""

    return f"{value:.9f}"


def display_word(word: Strand | None) -> str:
    if word is None:
        return "-"
    return format_word(word) or EMPTY_WORD


def _console(stream: TextIO | None) -> Console:
    return Console(file=stream, highlight=False, soft_wrap=True)


def _table(title: str) -> Table:
    return Table(
        title=title,
        box=box.ROUNDED,
        border_style="bright_blue",
        header_style="bold white",
        title_style="bold bright_white",
        pad_edge=False,
    )


def print_report(
    report: WellFormedReport,
    machine: MachineDef,
    *,
    verbose: bool = False,
    stream: TextIO | None = None,
) -> None:
    """Print the per-operator Gram deviations and a verdict line."""

    console = _console(stream)
    table = _table(f"Well-formedness (tol {report.tol:g})")
    table.add_column("U", style="cyan", no_wrap=True)
    table.add_column("max |G - I|", justify="right", no_wrap=True)
    table.add_column("status", no_wrap=True)
    for item in report.deviations:
        ok = item.deviation <= report.tol
        table.add_row(
            f"({item.pair[0]},{item.pair[1]})",
            f"{item.deviation:.3e}",
            Text("ok" if ok else "FAIL", style="bright_green" if ok else "bold bright_red"),
        )
    console.print(table)
    if verbose:
        for item in report.failing():
            console.print(f"U_({item.pair[0]},{item.pair[1]}):")
            for source in machine.declared_states:
                column = machine.operators.get(item.pair, {}).get(source, {})
                for target, amp in column.items():
                    console.print(f"  <{target}|U|{source}> = {_amplitude_text(amp)}")
    verdict = "well-formed" if report.well_formed else "NOT well-formed"
    console.print(f"{verdict}: max deviation {report.max_deviation:.3e}")


def _amplitude_text(amp: complex) -> str:
    try:
        return format_amplitude(amp)
    except ValueError:
        return f"{amp.real:.9f}{amp.imag:+.9f}i"


def format_outcome(w1: Strand, w2: Strand, outcome: RunOutcome) -> str:
    """Return the plain summary of one strand run."""

    lines = [
        f"upper: {display_word(w1)}",
        f"lower: {display_word(w2)}",
        f"p_acc: {probability(outcome.p_acc)}",
        f"p_rej: {probability(outcome.p_rej)}",
        f"p_residual: {probability(outcome.p_residual)}",
        f"steps: {outcome.steps}",
        f"halt: {outcome.halt_reason.value}",
    ]
    if outcome.norm_anomalies:
        steps = ", ".join(str(step) for step in outcome.norm_anomalies)
        lines.append(f"norm anomalies at steps: {steps}")
    return "\n".join(lines)


def format_decision(w1: Strand, decision: Decision, policy: str) -> str:
    """Return the plain summary of an exists-strand decision."""

    lines = [
        f"upper: {display_word(w1)}",
        f"policy: {policy}",
        f"decision: {'accepted' if decision.accepted else 'rejected'}",
        f"witness: {display_word(decision.witness)}",
        f"best_p_acc: {probability(decision.best_p_acc)}",
        f"strands_examined: {decision.strands_examined}",
    ]
    if decision.error_bound_holds is not None:
        lines.append(f"error bound holds: {'yes' if decision.error_bound_holds else 'no'}")
    return "\n".join(lines)


def print_sweep(rows: Sequence[SweepRow], *, title: str, stream: TextIO | None = None) -> None:
    """Print a language sweep as a table."""

    console = _console(stream)
    table = _table(title)
    table.add_column("word", style="cyan")
    table.add_column("accepted", no_wrap=True)
    table.add_column("best_p_acc", justify="right", no_wrap=True)
    table.add_column("strands", justify="right", no_wrap=True)
    table.add_column("witness")
    for row in rows:
        if row.error is not None:
            verdict = Text("budget", style="bold bright_red")
        elif row.accepted:
            verdict = Text("yes", style="bright_green")
        else:
            verdict = Text("no", style="bright_black")
        table.add_row(
            display_word(row.word),
            verdict,
            probability(row.best_p_acc),
            str(row.strands_examined),
            row.error or display_word(row.witness),
        )
    console.print(table)
    accepted = sum(1 for row in rows if row.accepted)
    console.print(f"{accepted} of {len(rows)} words accepted")


def print_corpus(entries: Sequence[tuple[str, str]], *, stream: TextIO | None = None) -> None:
    """Print corpus names with their languages."""

    console = _console(stream)
    for name, language in entries:
        console.print(f"{name}\t{language}")
