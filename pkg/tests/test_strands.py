from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wkqfa.automaton.model import ComplementarityRelation, load_machine
from wkqfa.corpus.machines import example2_document, theorem5_document
from wkqfa.errors import StrandBudgetExceeded, WordError
from wkqfa.tape.strands import (
    check_strand_budget,
    complements,
    count_complements,
    format_word,
    is_complementary,
    make_tapes,
    parse_word,
    strand_at,
)

WW_RHO = ComplementarityRelation((("a", "a"), ("a", "m"), ("b", "b"), ("b", "m")))
SYMBOLS = ["a", "b", "c"]


def test_compiled_regex_strands_for_ab() -> None:
    machine = load_machine(example2_document())

    strands = [format_word(strand) for strand in complements(("a", "b"), machine.rho)]

    assert strands == ["a1b1", "a1b2", "a2b1", "a2b2"]


def test_ww_relation_gives_sixteen_strands_for_abab() -> None:
    machine = load_machine(theorem5_document())
    word = ("a", "b", "a", "b")

    strands = list(complements(word, machine.rho))

    assert len(strands) == 16
    assert len(set(strands)) == 16
    assert strands[0] == word
    assert all(is_complementary(word, strand, machine.rho) for strand in strands)


def test_missing_complement_yields_no_strands() -> None:
    rho = ComplementarityRelation((("a", "a"),))

    assert count_complements(("a", "b"), rho) == 0
    assert list(complements(("a", "b"), rho)) == []


def test_empty_word_has_exactly_the_empty_strand() -> None:
    assert count_complements((), WW_RHO) == 1
    assert list(complements((), WW_RHO)) == [()]


def test_strand_at_matches_enumeration_order() -> None:
    word = ("a", "b", "b")

    enumerated = list(complements(word, WW_RHO))

    assert [strand_at(word, WW_RHO, index) for index in range(len(enumerated))] == enumerated
    with pytest.raises(IndexError):
        strand_at(word, WW_RHO, len(enumerated))


def test_budget_is_checked_before_enumeration() -> None:
    with pytest.raises(StrandBudgetExceeded) as excinfo:
        complements(("a",) * 5, WW_RHO, budget=16)

    assert excinfo.value.exit_code == 3
    assert excinfo.value.details == {"strands": 32, "budget": 16}


def test_is_complementary_requires_equal_length_and_pairs() -> None:
    assert is_complementary(("a", "b"), ("m", "b"), WW_RHO)
    assert not is_complementary(("a", "b"), ("b", "b"), WW_RHO)
    assert not is_complementary(("a", "b"), ("a",), WW_RHO)


def test_make_tapes_frames_both_strands() -> None:
    tapes = make_tapes(("a",), ("m",))

    assert tapes.upper == ("#", "a", "$")
    assert tapes.lower == ("#", "m", "$")


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("", ()),
        ("  ", ()),
        ("aba", ("a", "b", "a")),
        ("a1b2a1", ("a1", "b2", "a1")),
        ("a1 b2, a1", ("a1", "b2", "a1")),
    ],
)
def test_parse_word_tokenizes_symbols(text: str, expected: tuple[str, ...]) -> None:
    symbols = ("a", "a1", "a2", "b", "b1", "b2")

    assert parse_word(text, symbols) == expected


@pytest.mark.parametrize("text", ["abc", "a x", "a3"])
def test_parse_word_rejects_foreign_symbols(text: str) -> None:
    with pytest.raises(WordError):
        parse_word(text, ("a", "a1", "b"))


@given(word=st.lists(st.sampled_from(["a", "b"]), max_size=8))
def test_count_matches_enumeration(word: list[str]) -> None:
    strands = list(complements(word, WW_RHO))

    assert len(strands) == count_complements(word, WW_RHO) == 2 ** len(word)


@given(
    pairs=st.lists(
        st.tuples(st.sampled_from(SYMBOLS), st.sampled_from(SYMBOLS)), max_size=9, unique=True
    ),
    word=st.lists(st.sampled_from(SYMBOLS), max_size=6),
)
def test_count_matches_enumeration_for_any_relation(
    pairs: list[tuple[str, str]], word: list[str]
) -> None:
    rho = ComplementarityRelation(tuple(pairs))

    strands = list(complements(word, rho))

    assert len(strands) == count_complements(word, rho)
    assert len(set(strands)) == len(strands)
    assert all(is_complementary(word, strand, rho) for strand in strands)
    assert [strand_at(word, rho, index) for index in range(len(strands))] == strands


def test_budget_check_returns_the_strand_count() -> None:
    assert check_strand_budget(("a", "b"), WW_RHO, 4) == 4
    with pytest.raises(StrandBudgetExceeded):
        check_strand_budget(("a", "b", "a"), WW_RHO, 4)
