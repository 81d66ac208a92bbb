"""Strands, complement enumeration and tape framing."""

from .strands import (
    Strand,
    TapePair,
    check_strand_budget,
    complements,
    count_complements,
    format_word,
    is_complementary,
    make_tapes,
    parse_word,
    strand_at,
)

__all__ = [
    "Strand",
    "TapePair",
    "check_strand_budget",
    "complements",
    "count_complements",
    "format_word",
    "is_complementary",
    "make_tapes",
    "parse_word",
    "strand_at",
]
