"""Brute-force classical membership tests for the corpus languages."""

from __future__ import annotations

from collections.abc import Sequence

from ..compiler.dfa import dfa_run
from .machines import example2_dfa


def is_anbncn(word: Sequence[str]) -> bool:
    """``a^n b^n c^n`` with ``n >= 1``."""

    n = len(word) // 3
    return n >= 1 and len(word) == 3 * n and tuple(word) == ("a",) * n + ("b",) * n + ("c",) * n


def is_regex_ends_in_a(word: Sequence[str]) -> bool:
    """``(a+b)* a`` through the classical DFA."""

    return dfa_run(example2_dfa(), word)


def is_ww(word: Sequence[str]) -> bool:
    """``{ww | w in {a,b}*}`` by splitting at the midpoint."""

    half, odd = divmod(len(word), 2)
    return not odd and all(symbol in ("a", "b") for symbol in word) and (
        tuple(word[:half]) == tuple(word[half:])
    )


def parse_blocks(word: Sequence[str]) -> list[tuple[tuple[str, ...], tuple[str, ...]]] | None:
    """Split ``% w1 * x1 % w2 * x2 ...`` into ``(w, x)`` pairs; None when malformed."""

    blocks: list[tuple[tuple[str, ...], tuple[str, ...]]] = []
    if not word:
        return blocks
    if word[0] != "%":
        return None
    current: list[str] = []
    chunks: list[list[str]] = []
    for symbol in word[1:]:
        if symbol == "%":
            chunks.append(current)
            current = []
        else:
            current.append(symbol)
    chunks.append(current)
    for chunk in chunks:
        if chunk.count("*") != 1 or any(symbol not in ("a", "b", "*") for symbol in chunk):
            return None
        star = chunk.index("*")
        blocks.append((tuple(chunk[:star]), tuple(chunk[star + 1 :])))
    return blocks


def is_equal_w_distinct_x(word: Sequence[str]) -> bool:
    """Some two blocks have equal w parts and different x parts."""

    blocks = parse_blocks(word)
    if blocks is None:
        return False
    return any(
        left[0] == right[0] and left[1] != right[1]
        for index, left in enumerate(blocks)
        for right in blocks[index + 1 :]
    )
