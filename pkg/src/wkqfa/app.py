"""Tie machine sources, completion, simulation and compilation together for the CLI."""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from pathlib import Path

from .automaton.completion import complete_operators
from .automaton.model import MachineDef, load_machine, machine_to_document
from .automaton.wellformed import WellFormedReport, check_well_formed
from .compiler.construction import CompileSummary, compile_dfa, summarize
from .compiler.dfa import read_dfa
from .config.loaders import dump_document, read_machine_file
from .config.options import RunOptions
from .corpus.registry import get_machine, list_machines
from .errors import HeadOverrunError, MachineFileError, UnknownMachineError, WordError
from .runtime.decide import accepts
from .runtime.engine import run_strand
from .runtime.models import AcceptancePolicy, Decision, HaltReason, RunOutcome
from .tape.strands import Strand, complements, format_word, parse_word


@dataclass(slots=True)
class CheckResult:
    """A machine completed for reporting together with its well-formedness report."""

    machine: MachineDef
    report: WellFormedReport


@dataclass(slots=True)
class StrandRun:
    """One traced or plain run on an explicit strand pair."""

    upper: Strand
    lower: Strand
    outcome: RunOutcome


def load_source(source: str) -> MachineDef:
    """Return the uncompleted machine named by a corpus name or a file path."""

    if source in list_machines():
        return load_machine(machine_to_document(get_machine(source).machine))
    path = Path(source)
    if not path.exists():
        raise UnknownMachineError(
            f"'{source}' is neither a corpus machine ({', '.join(list_machines())}) "
            "nor an existing file",
            source=source,
        )
    return load_machine(read_machine_file(path))


def check_machine(source: str, *, tol: float, logger: logging.Logger) -> CheckResult:
    """Complete a machine leniently and report the Gram deviation of each operator."""

    machine = complete_operators(load_source(source), strict=False, tol=tol)
    report = check_well_formed(machine, tol=tol)
    logger.info(
        "Checked %s: %d operators, max deviation %.3e",
        source,
        len(report.deviations),
        report.max_deviation,
    )
    return CheckResult(machine=machine, report=report)


def prepare_machine(source: str) -> MachineDef:
    """Load and strictly complete a machine for simulation."""

    if source in list_machines():
        return get_machine(source).machine
    return complete_operators(load_source(source))


def parse_upper(machine: MachineDef, text: str) -> Strand:
    """Tokenize an upper word and require every symbol to have a complement."""

    word = parse_word(text, machine.alphabet.symbols)
    uppers = set(machine.rho.upper_symbols)
    missing = [symbol for symbol in word if symbol not in uppers]
    if missing:
        raise WordError(
            f"Symbol '{missing[0]}' of '{text}' has no complement under rho",
            word=text,
            symbol=missing[0],
        )
    return word


def run_pair(
    machine: MachineDef, upper: Strand, lower_text: str, options: RunOptions
) -> StrandRun:
    """Run one explicit strand pair.

    Raises:
        HeadOverrunError: if the run moved a head past '$'.
    """

    lower = parse_word(lower_text, machine.alphabet.symbols)
    outcome = run_strand(machine, upper, lower, options)
    if outcome.halt_reason is HaltReason.HEAD_OVERRUN:
        raise HeadOverrunError(
            f"Head moved past '$' on '{format_word(upper)}' / '{format_word(lower)}'"
        )
    return StrandRun(upper=upper, lower=lower, outcome=outcome)


def decide_word(
    machine: MachineDef, upper: Strand, policy: AcceptancePolicy, options: RunOptions
) -> tuple[Decision, StrandRun | None]:
    """Decide ``upper``; with tracing also re-run the witness (or first) strand."""

    decision = accepts(machine, upper, policy, replace(options, trace=False))
    if not options.trace:
        return decision, None
    traced = decision.witness
    if traced is None:
        traced = next(complements(upper, machine.rho), None)
    if traced is None:
        return decision, None
    return decision, StrandRun(upper, traced, run_strand(machine, upper, traced, options))


def compile_dfa_file(dfa_path: Path, output: Path | None) -> tuple[str, CompileSummary]:
    """Compile a DFA file and write the machine document when ``output`` is given."""

    machine = compile_dfa(read_dfa(dfa_path))
    text = dump_document(machine_to_document(machine))
    if output is not None:
        try:
            output.parent.mkdir(parents=True, exist_ok=True)
            output.write_text(text, encoding="utf-8")
        except OSError as exc:
            raise MachineFileError(f"Unable to write machine file: {output}") from exc
    return text, summarize(machine)
