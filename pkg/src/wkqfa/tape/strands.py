"""Complementary lower-strand enumeration and tape construction."""

from __future__ import annotations

import itertools
import math
import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from ..automaton.model import ComplementarityRelation
from ..config.models import LEFT_END, RIGHT_END
from ..errors import StrandBudgetExceeded, WordError

Strand = tuple[str, ...]

_SEPARATORS = re.compile(r"[\s,]+")


@dataclass(frozen=True, slots=True)
class TapePair:
    """Both strands framed by endmarkers: ``# w1 $`` over ``# w2 $``."""

    upper: Strand
    lower: Strand


def make_tapes(w1: Sequence[str], w2: Sequence[str]) -> TapePair:
    """Frame two strands with the endmarkers."""

    return TapePair(
        upper=(LEFT_END, *w1, RIGHT_END),
        lower=(LEFT_END, *w2, RIGHT_END),
    )


def _choices(w1: Sequence[str], rho: ComplementarityRelation) -> list[tuple[str, ...]]:
    return [rho.complements_of(symbol) for symbol in w1]


def count_complements(w1: Sequence[str], rho: ComplementarityRelation) -> int:
    """Return the number of strands complementary to ``w1``."""

    return math.prod(len(options) for options in _choices(w1, rho))


def complements(
    w1: Sequence[str], rho: ComplementarityRelation, *, budget: int | None = None
) -> Iterator[Strand]:
    """Yield every strand complementary to ``w1`` in lexicographic order.

    The order follows the declaration order of the complements of each upper
    symbol, with the last position varying fastest.

    Raises:
        StrandBudgetExceeded: if more than ``budget`` strands would be produced.
    """

    if budget is not None:
        check_strand_budget(w1, rho, budget)
    return itertools.product(*_choices(w1, rho))


def check_strand_budget(w1: Sequence[str], rho: ComplementarityRelation, budget: int) -> int:
    """Return the strand count of ``w1``, refusing counts above ``budget``.

    Raises:
        StrandBudgetExceeded: if more than ``budget`` strands would be produced.
    """

    total = count_complements(w1, rho)
    if total > budget:
        raise StrandBudgetExceeded(
            f"Strand budget exceeded: {total} complementary strands > budget {budget}",
            strands=total,
            budget=budget,
        )
    return total


def strand_at(w1: Sequence[str], rho: ComplementarityRelation, index: int) -> Strand:
    """Return the ``index``-th strand of :func:`complements` by mixed-radix decoding."""

    choices = _choices(w1, rho)
    total = math.prod(len(options) for options in choices)
    if not 0 <= index < total:
        raise IndexError(f"strand index {index} out of range for {total} strands")
    digits: list[str] = []
    for options in reversed(choices):
        index, digit = divmod(index, len(options))
        digits.append(options[digit])
    return tuple(reversed(digits))


def is_complementary(
    w1: Sequence[str], w2: Sequence[str], rho: ComplementarityRelation
) -> bool:
    """Return True when ``w2`` pairs with ``w1`` position by position under ``rho``."""

    if len(w1) != len(w2):
        return False
    return all(rho.contains(upper, lower) for upper, lower in zip(w1, w2, strict=True))


def parse_word(text: str, symbols: Iterable[str]) -> Strand:
    """Tokenize ``text`` into alphabet symbols.

    Symbols may be separated by spaces or commas; otherwise the text is split
    greedily, longest symbol first. The empty string is the empty word.

    Raises:
        WordError: if some part of ``text`` is not an alphabet symbol.
    """

    alphabet = set(symbols)
    stripped = text.strip()
    if not stripped:
        return ()
    if _SEPARATORS.search(stripped):
        tokens = [token for token in _SEPARATORS.split(stripped) if token]
        unknown = [token for token in tokens if token not in alphabet]
        if unknown:
            raise WordError(
                f"Unknown symbol '{unknown[0]}' in word {text!r}", word=text, symbol=unknown[0]
            )
        return tuple(tokens)

    ordered = sorted(alphabet, key=len, reverse=True)
    word: list[str] = []
    pos = 0
    while pos < len(stripped):
        for symbol in ordered:
            if stripped.startswith(symbol, pos):
                word.append(symbol)
                pos += len(symbol)
                break
        else:
            raise WordError(
                f"Word {text!r} is not over the alphabet at position {pos}",
                word=text,
                position=pos,
            )
    return tuple(word)


def format_word(word: Sequence[str]) -> str:
    """Render a word by concatenating its symbols; the empty word renders as ''."""

    return "".join(word)
