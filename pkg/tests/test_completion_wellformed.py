from __future__ import annotations

import copy
import json
from pathlib import Path

import numpy as np
import pytest

from wkqfa.automaton.completion import complete_operators
from wkqfa.automaton.model import load_machine
from wkqfa.automaton.wellformed import check_well_formed, extend_to_unitary
from wkqfa.corpus.machines import example1_document, theorem3_document, theorem5_document
from wkqfa.errors import CompletionError

FIXTURES = Path(__file__).resolve().parent / "fixtures"


def test_completion_redirects_zero_columns_to_fresh_reject_states() -> None:
    machine = complete_operators(load_machine(example1_document()))

    column = machine.operators[("#", "#")]["q1"]
    (fresh,) = column
    assert fresh == "q_rej<q1,#,#>"
    assert fresh in machine.rejecting
    assert machine.directions[fresh] == (0, 0)
    assert machine.declared_states == ("q0", "q1", "q2", "q3", "q_acc")
    assert len(machine.states) > len(machine.declared_states)


def test_completion_materializes_every_readable_pair() -> None:
    machine = complete_operators(load_machine(example1_document()))

    for pair in machine.readable_pairs():
        assert pair in machine.operators
        for state in machine.declared_states:
            assert machine.operators[pair][state]


def test_completion_is_idempotent() -> None:
    machine = complete_operators(load_machine(example1_document()))

    assert complete_operators(machine) is machine


def test_strict_completion_rejects_non_unit_column() -> None:
    document = copy.deepcopy(example1_document())
    document["operators"][0]["entries"][0]["amp"] = "1/2"

    with pytest.raises(CompletionError):
        complete_operators(load_machine(document))


def test_strict_completion_rejects_non_orthogonal_columns() -> None:
    document = copy.deepcopy(example1_document())
    document["operators"][0]["entries"].append({"from": "q1", "to": "q0", "amp": "1"})

    with pytest.raises(CompletionError) as excinfo:
        complete_operators(load_machine(document))

    assert "not orthogonal" in excinfo.value.message


@pytest.mark.parametrize("document", [example1_document, theorem3_document, theorem5_document])
def test_corpus_documents_are_well_formed(document) -> None:
    machine = complete_operators(load_machine(document()))

    report = check_well_formed(machine, tol=1e-9)

    assert report.well_formed
    assert report.max_deviation <= 1e-9


def test_duplicated_columns_fail_the_check() -> None:
    document = copy.deepcopy(example1_document())
    document["operators"][0]["entries"].append({"from": "q1", "to": "q0", "amp": "1"})
    machine = complete_operators(load_machine(document), strict=False)

    report = check_well_formed(machine, tol=1e-9)

    assert not report.well_formed
    assert [item.pair for item in report.failing()] == [("#", "#")]
    assert report.max_deviation == pytest.approx(1.0)


def test_mutating_any_example1_amplitude_breaks_well_formedness() -> None:
    base = example1_document()
    for index, operator in enumerate(base["operators"]):
        document = copy.deepcopy(base)
        document["operators"][index]["entries"][0]["amp"] = "11/10"
        machine = complete_operators(load_machine(document), strict=False)

        report = check_well_formed(machine, tol=1e-9)

        assert not report.well_formed, operator


def test_printed_ww_table_is_not_well_formed() -> None:
    document = json.loads((FIXTURES / "theorem5_printed.json").read_text(encoding="utf-8"))
    machine = complete_operators(load_machine(document), strict=False)

    report = check_well_formed(machine, tol=1e-9)

    failing = {item.pair for item in report.failing()}
    assert ("a", "$") in failing
    assert ("$", "$") in failing


def test_extend_to_unitary_returns_a_unitary_matching_declared_columns() -> None:
    machine = complete_operators(load_machine(theorem5_document()))

    unitary = extend_to_unitary(machine, ("a", "$"))

    size = len(machine.states)
    assert unitary.shape == (size, size)
    assert np.allclose(unitary.conj().T @ unitary, np.eye(size), atol=1e-9)
    q5 = machine.states.index("q5")
    s2 = machine.states.index("s2")
    assert unitary[s2, q5] == pytest.approx(2**-0.5)


def test_extend_to_unitary_refuses_ill_formed_operator() -> None:
    document = copy.deepcopy(example1_document())
    document["operators"][0]["entries"].append({"from": "q1", "to": "q0", "amp": "1"})
    machine = complete_operators(load_machine(document), strict=False)

    with pytest.raises(CompletionError):
        extend_to_unitary(machine, ("#", "#"))
