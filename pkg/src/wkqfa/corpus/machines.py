"""Machine documents of the built-in corpus."""

from __future__ import annotations

from typing import Any

from ..automaton.model import machine_to_document
from ..compiler.construction import compile_dfa
from ..compiler.dfa import DfaDef

HALF = "1/sqrt(2)"
MINUS_HALF = "-1/sqrt(2)"


def _operator(upper: str, lower: str, *entries: tuple[str, str, str]) -> dict[str, Any]:
    return {
        "upper": upper,
        "lower": lower,
        "entries": [{"from": source, "to": target, "amp": amp} for source, target, amp in entries],
    }


def _basis(upper: str, lower: str, *moves: tuple[str, str]) -> dict[str, Any]:
    return _operator(upper, lower, *((source, target, "1") for source, target in moves))


def example1_document() -> dict[str, Any]:
    """``a^n b^n c^n, n >= 1`` with an injective relation.

    The lower head skips the a's while the upper head waits, then b's are
    matched against the a's and c's against the b's.
    """

    return {
        "states": ["q0", "q1", "q2", "q3", "q_acc"],
        "start": "q0",
        "accept": ["q_acc"],
        "reject": [],
        "alphabet": ["a", "b", "c"],
        "rho": [["a", "a"], ["b", "b"], ["c", "c"]],
        "directions": {
            "q0": [0, 1],
            "q1": [1, 1],
            "q2": [1, 1],
            "q3": [1, 0],
            "q_acc": [0, 0],
        },
        "operators": [
            _basis("#", "#", ("q0", "q0")),
            _basis("#", "a", ("q0", "q0")),
            _basis("#", "b", ("q0", "q1")),
            _basis("a", "b", ("q1", "q1")),
            _basis("a", "c", ("q1", "q2")),
            _basis("b", "c", ("q2", "q2")),
            _basis("b", "$", ("q2", "q3")),
            _basis("c", "$", ("q3", "q3")),
            _basis("$", "$", ("q3", "q_acc")),
        ],
    }


def example2_dfa() -> DfaDef:
    """DFA for ``(a+b)* a``: q1 means the last symbol read was an a."""

    return DfaDef(
        states=("q0", "q1"),
        alphabet=("a", "b"),
        delta={
            ("q0", "a"): "q1",
            ("q0", "b"): "q0",
            ("q1", "a"): "q1",
            ("q1", "b"): "q0",
        },
        start="q0",
        final=frozenset({"q1"}),
    )


def example2_document() -> dict[str, Any]:
    """The compiled form of :func:`example2_dfa`."""

    return machine_to_document(compile_dfa(example2_dfa()))


def theorem3_document() -> dict[str, Any]:
    """Blocks ``% w * x``: some two blocks share their w part but differ in x.

    The lower strand marks the two chosen blocks with ``vm1`` and ``vm2``
    under their ``%``. The lower head then runs ahead to the second mark, and
    both heads compare the w parts and the x parts of the two blocks.
    """

    q3_accepts = (
        ("a", "b"),
        ("a", "*"),
        ("a", "%"),
        ("a", "$"),
        ("b", "a"),
        ("b", "*"),
        ("b", "%"),
        ("b", "$"),
        ("*", "a"),
        ("*", "b"),
        ("*", "%"),
        ("*", "$"),
    )
    operators = [
        _basis("#", "#", ("q0", "q0")),
        _basis("%", "%", ("q0", "q0"), ("q1", "q1"), ("q3", "q4")),
        _basis("a", "a", ("q0", "q0"), ("q2", "q2"), ("q3", "q3")),
        _basis("b", "b", ("q0", "q0"), ("q2", "q2"), ("q3", "q3")),
        _basis("*", "*", ("q0", "q0"), ("q2", "q3")),
        _basis("%", "vm1", ("q0", "q1")),
        _basis("%", "a", ("q1", "q1"), ("q3", "q5")),
        _basis("%", "b", ("q1", "q1"), ("q3", "q5")),
        _basis("%", "*", ("q1", "q1"), ("q3", "q5")),
        _basis("%", "vm2", ("q1", "q2")),
        _basis("%", "$", ("q3", "q4")),
    ]
    operators.extend(_basis(upper, lower, ("q3", "q5")) for upper, lower in q3_accepts)
    return {
        "states": ["q0", "q1", "q2", "q3", "q4", "q5"],
        "start": "q0",
        "accept": ["q5"],
        "reject": ["q4"],
        "alphabet": ["a", "b", "vm1", "vm2", "%", "*"],
        "rho": [["a", "a"], ["%", "%"], ["%", "vm1"], ["%", "vm2"], ["b", "b"], ["*", "*"]],
        "directions": {
            "q0": [1, 1],
            "q1": [0, 1],
            "q2": [1, 1],
            "q3": [1, 1],
            "q4": [0, 0],
            "q5": [0, 0],
        },
        "operators": operators,
    }


def theorem5_document() -> dict[str, Any]:
    """``{ww | w in {a,b}*}`` with bounded error.

    The lower strand carries one ``m`` at the guessed midpoint p. The first
    (#,#) read splits into two paths of amplitude 1/sqrt(2):

    * q1/q3/q5 waits for the lower head to pass ``m``, then checks
      ``w[k] == w[k + p]`` in lockstep and reaches '$' on the lower strand
      with the upper head at ``N - p + 1``;
    * q2/q4/q6 runs the upper head one cell ahead of the lower head until the
      lower head reads ``m``, then parks the upper head at ``p + 1`` while the
      lower head runs to '$'.

    Both paths arrive in the same step. A two-point Fourier step sends them
    to s2 with opposite relative phase on s1, so the amplitudes cancel on s1
    exactly when the upper heads coincide, which is ``N == 2p``.
    """

    letters = ("a", "b")
    operators = [
        _operator("#", "#", ("q0", "q1", HALF), ("q0", "q2", HALF), ("q1", "q3", "1")),
        _basis("#", "a", ("q3", "q3")),
        _basis("#", "b", ("q3", "q3")),
        _basis("#", "m", ("q3", "q5")),
    ]
    for x in letters:
        operators.append(_basis(x, "#", ("q2", "q4")))
        for y in letters:
            compare = "q5" if x == y else "q_rej"
            operators.append(_basis(x, y, ("q4", "q4"), ("q5", compare), ("q6", "q6")))
        operators.append(_basis(x, "m", ("q4", "q6"), ("q5", "q_rej2")))
        operators.append(
            _operator(
                x,
                "$",
                ("q5", "s1", MINUS_HALF),
                ("q5", "s2", HALF),
                ("q6", "s1", HALF),
                ("q6", "s2", HALF),
            )
        )
    for y in (*letters, "m"):
        operators.append(_basis("$", y, ("q4", "q_rej1")))

    return {
        "states": [
            "q0",
            "q1",
            "q2",
            "q3",
            "q4",
            "q5",
            "q6",
            "s1",
            "s2",
            "q_rej",
            "q_rej1",
            "q_rej2",
        ],
        "start": "q0",
        "accept": ["s2"],
        "reject": ["s1", "q_rej", "q_rej1", "q_rej2"],
        "alphabet": ["a", "b", "m"],
        "rho": [["a", "a"], ["a", "m"], ["b", "b"], ["b", "m"]],
        "directions": {
            "q0": [0, 1],
            "q1": [0, 0],
            "q2": [1, 0],
            "q3": [0, 1],
            "q4": [1, 1],
            "q5": [1, 1],
            "q6": [0, 1],
            "s1": [0, 0],
            "s2": [0, 0],
            "q_rej": [0, 0],
            "q_rej1": [0, 0],
            "q_rej2": [0, 0],
        },
        "operators": operators,
    }
