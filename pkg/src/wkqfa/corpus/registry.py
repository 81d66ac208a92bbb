"""Named corpus machines with their membership oracles."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from functools import cache
from pathlib import Path
from typing import Any

from ..automaton.completion import complete_operators
from ..automaton.model import MachineDef, load_machine, machine_to_document
from ..config.loaders import dump_document
from ..errors import MachineFileError, UnknownMachineError
from . import machines, oracles

logger = logging.getLogger(__name__)

Oracle = Callable[[Sequence[str]], bool]


@dataclass(frozen=True, slots=True)
class CorpusEntry:
    """A completed corpus machine, its membership oracle, and provenance notes."""

    name: str
    machine: MachineDef
    oracle: Oracle
    language: str
    notes: str


@dataclass(frozen=True, slots=True)
class _Spec:
    document: Callable[[], dict[str, Any]]
    oracle: Oracle
    language: str
    notes: str


_SPECS: dict[str, _Spec] = {
    "example1_anbncn": _Spec(
        document=machines.example1_document,
        oracle=oracles.is_anbncn,
        language="a^n b^n c^n, n >= 1",
        notes=(
            "Injective relation {(a,a),(b,b),(c,c)}; accepts members and rejects "
            "non-members with probability 1."
        ),
    ),
    "example2_regex": _Spec(
        document=machines.example2_document,
        oracle=oracles.is_regex_ends_in_a,
        language="(a+b)* a",
        notes=(
            "Compiled from the two-state DFA; lower symbols a1, a2, b1, b2 number "
            "the DFA transitions in state-then-symbol order."
        ),
    ),
    "theorem3_yao": _Spec(
        document=machines.theorem3_document,
        oracle=oracles.is_equal_w_distinct_x,
        language="% w1 * x1 % w2 * x2 ... % wn * xn, some i != j with wi = wj and xi != xj",
        notes=(
            "vm1 and vm2 on the lower strand mark the two compared blocks. The oracle "
            "treats words that are not a sequence of '% w * x' blocks as non-members."
        ),
    ),
    "theorem5_ww": _Spec(
        document=machines.theorem5_document,
        oracle=oracles.is_ww,
        language="ww, w in {a,b}*",
        notes=(
            "m on the lower strand marks the guessed midpoint. Members are accepted "
            "with probability 1, non-members rejected with probability at least 1/2. "
            "The empty word is rejected although it is in the language."
        ),
    ),
}


def list_machines() -> list[str]:
    """Return the corpus names in registration order."""

    return list(_SPECS)


def _spec(name: str) -> _Spec:
    try:
        return _SPECS[name]
    except KeyError as exc:
        raise UnknownMachineError(
            f"Unknown corpus machine '{name}'. Available: {', '.join(_SPECS)}", name=name
        ) from exc


@cache
def get_machine(name: str) -> CorpusEntry:
    """Return the completed corpus machine registered under ``name``."""

    spec = _spec(name)
    machine = complete_operators(load_machine(spec.document()))
    logger.debug("Loaded corpus machine %s with %d states", name, len(machine.states))
    return CorpusEntry(
        name=name,
        machine=machine,
        oracle=spec.oracle,
        language=spec.language,
        notes=spec.notes,
    )


def corpus_document(name: str) -> dict[str, Any]:
    """Return the machine-file document of a corpus machine."""

    return machine_to_document(get_machine(name).machine)


def oracle_membership(name: str, word: Sequence[str]) -> bool:
    """Return the classical membership answer for ``word``."""

    return _spec(name).oracle(word)


def export_machine(name: str, directory: Path) -> list[Path]:
    """Write ``<name>.json`` and ``<name>.oracle.txt`` into ``directory``."""

    entry = get_machine(name)
    machine_path = directory / f"{name}.json"
    oracle_path = directory / f"{name}.oracle.txt"
    try:
        directory.mkdir(parents=True, exist_ok=True)
        machine_path.write_text(dump_document(corpus_document(name)), encoding="utf-8")
        oracle_path.write_text(
            f"language: {entry.language}\nnotes: {entry.notes}\n", encoding="utf-8"
        )
    except OSError as exc:
        raise MachineFileError(f"Unable to write corpus files to {directory}: {exc}") from exc
    logger.info("Exported corpus machine %s to %s", name, directory)
    return [machine_path, oracle_path]
