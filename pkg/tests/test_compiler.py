from __future__ import annotations

import random
from pathlib import Path

import pytest

from wkqfa.automaton.completion import complete_operators
from wkqfa.automaton.wellformed import check_well_formed
from wkqfa.compiler import compile_dfa, dfa_run, random_dfa, read_dfa, summarize
from wkqfa.compiler.dfa import DfaDef, dfa_to_document, load_dfa
from wkqfa.corpus.machines import example2_dfa
from wkqfa.errors import MachineValidationError, WordError
from wkqfa.runtime import accepts, words_up_to

FIXTURES = Path(__file__).resolve().parent / "fixtures"


def test_regex_dfa_compiles_to_expected_structure() -> None:
    machine = compile_dfa(example2_dfa())

    assert machine.states == ("q0", "q1", "q0'", "q_acc")
    assert machine.start == "q0'"
    assert machine.accepting == frozenset({"q_acc"})
    assert machine.alphabet.symbols == ("a", "a1", "a2", "b", "b1", "b2")
    assert machine.rho.pairs == (("a", "a1"), ("a", "a2"), ("b", "b1"), ("b", "b2"))
    assert machine.operators[("a", "a1")] == {"q0": {"q1": 1}}
    assert machine.operators[("b", "b2")] == {"q1": {"q0": 1}}
    assert machine.operators[("$", "$")] == {"q1": {"q_acc": 1}}
    assert machine.directions["q_acc"] == (0, 0)
    assert summarize(machine).describe() == "|V'| = 6, |rho| = 4, |Q'| = 4"


def test_compiled_regex_finds_run_as_witness() -> None:
    machine = compile_dfa(example2_dfa())

    decision = accepts(machine, ("a", "b", "a"))

    assert decision.accepted
    assert decision.witness == ("a1", "b2", "a1")
    assert decision.strands_examined == 3


def test_compiled_regex_rejects_word_ending_in_b() -> None:
    machine = compile_dfa(example2_dfa())

    decision = accepts(machine, ("a", "b"))

    assert not decision.accepted
    assert decision.strands_examined == 4
    assert decision.best_p_acc == 0.0


def test_compiled_machines_are_well_formed() -> None:
    machine = complete_operators(compile_dfa(example2_dfa()))

    assert check_well_formed(machine).well_formed


def test_each_final_state_gets_its_own_accepting_state() -> None:
    dfa = DfaDef(
        states=("p", "r"),
        alphabet=("a",),
        delta={("p", "a"): "r", ("r", "a"): "p"},
        start="p",
        final=frozenset({"p", "r"}),
    )

    machine = compile_dfa(dfa)
    completed = complete_operators(machine)

    assert machine.accepting == frozenset({"q_acc<p>", "q_acc<r>"})
    assert machine.operators[("$", "$")] == {"p": {"q_acc<p>": 1}, "r": {"q_acc<r>": 1}}
    assert machine.directions["q_acc<r>"] == (0, 0)
    assert check_well_formed(completed, tol=1e-9).well_formed
    for word in words_up_to(("a",), 4):
        decision = accepts(completed, word)
        assert decision.accepted
        assert decision.best_p_acc == pytest.approx(1.0, abs=1e-9)


def test_dfa_without_final_states_keeps_one_accepting_state() -> None:
    dfa = DfaDef(
        states=("p",),
        alphabet=("a",),
        delta={("p", "a"): "p"},
        start="p",
        final=frozenset(),
    )

    machine = compile_dfa(dfa)

    assert machine.states == ("p", "p'", "q_acc")
    assert ("$", "$") not in machine.operators


def test_fresh_names_avoid_clashes() -> None:
    dfa = DfaDef(
        states=("p", "p'", "q_acc"),
        alphabet=("a", "a1"),
        delta={(state, symbol): "p" for state in ("p", "p'", "q_acc") for symbol in ("a", "a1")},
        start="p",
        final=frozenset({"q_acc"}),
    )

    machine = compile_dfa(dfa)

    assert machine.start == "p''"
    assert "q_acc'" in machine.accepting
    assert len(set(machine.alphabet.symbols)) == len(machine.alphabet.symbols)


@pytest.mark.parametrize(("final", "expected"), [(frozenset(), False), (frozenset({"s0"}), True)])
def test_single_state_dfa(final: frozenset[str], expected: bool) -> None:
    dfa = DfaDef(
        states=("s0",),
        alphabet=("a", "b"),
        delta={("s0", "a"): "s0", ("s0", "b"): "s0"},
        start="s0",
        final=final,
    )
    machine = compile_dfa(dfa)

    for word in words_up_to(("a", "b"), 3):
        assert accepts(machine, word).accepted is expected


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(25))
def test_compiled_random_dfas_accept_the_same_words(seed: int, strand_outcomes) -> None:
    dfa = random_dfa(random.Random(seed))
    machine = complete_operators(compile_dfa(dfa))
    assert check_well_formed(machine, tol=1e-9).well_formed

    for word in words_up_to(dfa.alphabet, 6):
        outcomes = strand_outcomes(machine, word)
        best = max(outcome.p_acc for _, outcome in outcomes)
        if dfa_run(dfa, word):
            assert best == pytest.approx(1.0, abs=1e-9), (seed, word)
        else:
            assert best <= 1e-9, (seed, word)


def test_read_dfa_loads_fixture() -> None:
    dfa = read_dfa(FIXTURES / "example2_dfa.json")

    assert dfa == example2_dfa()
    assert load_dfa(dfa_to_document(dfa)) == dfa


def test_partial_dfa_is_rejected() -> None:
    with pytest.raises(MachineValidationError) as excinfo:
        read_dfa(FIXTURES / "partial_dfa.json")

    assert "delta is not total" in excinfo.value.message
    assert "(q0, b)" in excinfo.value.message


def test_dfa_run_rejects_foreign_symbols() -> None:
    with pytest.raises(WordError):
        dfa_run(example2_dfa(), ("c",))
