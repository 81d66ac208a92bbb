"""Parsing and comparison of amplitude expressions used in machine files.

Grammar (whitespace between tokens is ignored)::

    expr     := term | term "+" term | term "-" term
    term     := coeff | coeff "*" "i" | "i"
    coeff    := rational | rational "/" "sqrt(" posint ")"
              | "exp(2*pi*i*" integer "/" posint ")"
    rational := integer | integer "/" posint
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NoReturn

from ..errors import AmplitudeSyntaxError

DEFAULT_TOL = 1e-9

ComplexAmplitude = complex

_INT_RE = re.compile(r"-?\d+")
_QUARTER_TURNS = (1 + 0j, 1j, -1 + 0j, -1j)


@dataclass(slots=True)
class _Parser:
    """Recursive-descent parser over one expression string."""

    text: str
    pos: int = 0

    def parse(self) -> complex:
        self._skip()
        if self.pos >= len(self.text):
            self._fail("empty amplitude expression")
        value = self._term()
        self._skip()
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            sign = 1 if self.text[self.pos] == "+" else -1
            self.pos += 1
            value += sign * self._term()
        self._skip()
        if self.pos != len(self.text):
            self._fail(f"unexpected {self.text[self.pos]!r}")
        return value

    def _term(self) -> complex:
        self._skip()
        if self._peek_word("i"):
            self.pos += 1
            return 1j
        coeff = self._coeff()
        self._skip()
        if self.text.startswith("*", self.pos):
            self.pos += 1
            self._expect("i")
            return coeff * 1j
        return coeff

    def _coeff(self) -> complex:
        self._skip()
        start = self.pos
        try:
            return self._magnitude()
        except OverflowError:
            self.pos = start
            self._fail("amplitude literal out of range")

    def _magnitude(self) -> complex:
        if self.text.startswith("exp", self.pos):
            return self._phase()
        numerator = self._integer()
        value = Fraction(numerator)
        self._skip()
        if self.text.startswith("/", self.pos) and not self._after_slash_is_sqrt():
            self.pos += 1
            denominator = self._positive_integer()
            value = Fraction(numerator, denominator)
            self._skip()
        if self.text.startswith("/", self.pos) and self._after_slash_is_sqrt():
            self.pos += 1
            self._expect("sqrt")
            self._expect("(")
            radicand = self._positive_integer()
            self._expect(")")
            return complex(float(value) / math.sqrt(radicand))
        return complex(float(value))

    def _phase(self) -> complex:
        for token in ("exp", "(", "2", "*", "pi", "*", "i", "*"):
            self._expect(token)
        numerator = self._integer()
        self._expect("/")
        denominator = self._positive_integer()
        self._expect(")")
        return unit_phase(numerator, denominator)

    def _after_slash_is_sqrt(self) -> bool:
        rest = self.text[self.pos + 1 :].lstrip()
        return rest.startswith("sqrt")

    def _integer(self) -> int:
        self._skip()
        match = _INT_RE.match(self.text, self.pos)
        if match is None:
            self._fail("expected an integer")
        try:
            value = int(match.group())
        except ValueError:
            self._fail("integer literal too long")
        self.pos = match.end()
        return value

    def _positive_integer(self) -> int:
        start = self.pos
        value = self._integer()
        if value == 0:
            self.pos = start
            self._skip()
            self._fail("division by zero")
        if value < 0:
            self.pos = start
            self._skip()
            self._fail("expected a positive integer")
        return value

    def _expect(self, token: str) -> None:
        self._skip()
        if not self.text.startswith(token, self.pos):
            self._fail(f"expected {token!r}")
        self.pos += len(token)

    def _peek_word(self, word: str) -> bool:
        if not self.text.startswith(word, self.pos):
            return False
        end = self.pos + len(word)
        return end == len(self.text) or not self.text[end].isalnum()

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _fail(self, message: str) -> NoReturn:
        raise AmplitudeSyntaxError(message, text=self.text, position=self.pos)


def unit_phase(k: int, n: int) -> complex:
    """Return e^{2*pi*i*k/n}, exact on quarter turns."""

    if n <= 0:
        raise ValueError("phase denominator must be positive")
    if (4 * k) % n == 0:
        return _QUARTER_TURNS[(4 * k // n) % 4]
    return cmath.rect(1.0, 2.0 * math.pi * (k % n) / n)


def parse_amplitude(text: str) -> complex:
    """Evaluate one amplitude expression to a double-precision complex value."""

    value = _Parser(text).parse()
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise AmplitudeSyntaxError("non-finite amplitude", text=text, position=0)
    return value


def approx_eq(a: complex, b: complex, tol: float = DEFAULT_TOL) -> bool:
    """Return True when the complex modulus of ``a - b`` is within ``tol``."""

    if tol <= 0:
        raise ValueError("tol must be > 0")
    return abs(a - b) <= tol


def _format_real(value: float, tol: float) -> str | None:
    for radicand in (1, 2, 3, 5, 6, 7):
        scaled = value * math.sqrt(radicand)
        fraction = Fraction(scaled).limit_denominator(64)
        if abs(float(fraction) - scaled) > tol:
            continue
        rational = str(fraction.numerator)
        if fraction.denominator != 1:
            rational = f"{fraction.numerator}/{fraction.denominator}"
        if radicand == 1:
            return rational
        if fraction.denominator != 1:
            continue
        return f"{rational}/sqrt({radicand})"
    return None


def format_amplitude(value: complex, tol: float = DEFAULT_TOL) -> str:
    """Render a complex value as an expression of the amplitude grammar.

    Raises:
        ValueError: if a component is not a small rational or rational/sqrt(n).
    """

    re_part = 0.0 if abs(value.real) <= tol else value.real
    im_part = 0.0 if abs(value.imag) <= tol else value.imag
    real_text = _format_real(re_part, tol)
    imag_text = _format_real(abs(im_part), tol)
    if real_text is None or imag_text is None:
        raise ValueError(f"amplitude {value!r} has no exact expression form")
    if im_part == 0.0:
        return real_text
    imag_term = "i" if imag_text == "1" else f"{imag_text}*i"
    if re_part == 0.0:
        if im_part > 0:
            return imag_term
        return f"-{imag_text}*i"
    sign = "+" if im_part > 0 else "-"
    return f"{real_text} {sign} {imag_term}"
