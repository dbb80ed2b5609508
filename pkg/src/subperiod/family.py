"""One-parameter families of subtraction sets, e.g. ``"1,4,5k"``.

Grammar: comma-separated terms, each ``INT``, ``[INT]k`` or ``[INT]k+INT``.
The parameter is always ``k``; a bare ``k`` means ``1k``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .game import SubtractionSet

_TERM = re.compile(r"\s*(?:(?P<a>\d+)?(?P<k>k)(?:\s*\+\s*(?P<b>\d+))?|(?P<c>\d+))\s*")
_RANGE = re.compile(r"\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?")


class FamilyParseError(ValueError):
    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        super().__init__(f"{reason} at position {position} in {text!r}")


@dataclass(frozen=True)
class FamilyExpression:
    """Elements ``a*k + b`` for each ``(a, b)`` in ``terms``."""

    terms: tuple[tuple[int, int], ...]
    source: str = ""

    @classmethod
    def parse(cls, text: str) -> FamilyExpression:
        terms = []
        pos = 0
        while True:
            m = _TERM.match(text, pos)
            if m is None or m.end() == pos:
                raise FamilyParseError(text, _skip_space(text, pos), "expected INT, INTk or INTk+INT")
            if m.group("c") is not None:
                a, b = 0, int(m.group("c"))
            else:
                a = int(m.group("a")) if m.group("a") is not None else 1
                b = int(m.group("b")) if m.group("b") is not None else 0
            if a + b < 1:
                raise FamilyParseError(text, _skip_space(text, m.start()), "term is identically zero")
            terms.append((a, b))
            pos = m.end()
            if pos == len(text):
                break
            if text[pos] != ",":
                raise FamilyParseError(text, pos, f"unexpected {text[pos]!r}")
            pos += 1
        return cls(tuple(terms), text)

    def instantiate(self, k: int) -> SubtractionSet:
        """Set for parameter ``k``; raises ``ValueError`` if it is not a valid set."""
        return SubtractionSet(a * k + b for a, b in self.terms)

    def __str__(self):
        if self.source:
            return self.source
        parts = []
        for a, b in self.terms:
            if a == 0:
                parts.append(str(b))
            else:
                head = "k" if a == 1 else f"{a}k"
                parts.append(f"{head}+{b}" if b else head)
        return ",".join(parts)


def _skip_space(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def parse_range(text: str) -> range:
    """``"3..15"`` is inclusive on both ends; a single integer is a one-item range."""
    m = _RANGE.fullmatch(text)
    if m is None:
        raise ValueError(f"invalid range {text!r}; expected LO..HI or N")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if hi < lo:
        raise ValueError(f"empty range {text!r}")
    return range(lo, hi + 1)
