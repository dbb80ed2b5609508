"""Subtraction sets and their outcome / Grundy sequences (normal play)."""
from __future__ import annotations

import operator
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _kernels


def mex(values: Iterable[int]) -> int:
    """Least non-negative integer not in ``values``."""
    present = set(values)
    m = 0
    while m in present:
        m += 1
    return m


@dataclass(frozen=True)
class SubtractionSet:
    """Move sizes of a single-heap subtraction game.

    Elements are stored sorted. Duplicates are rejected rather than merged.
    """

    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int]):
        items = [operator.index(e) for e in elements]
        if not items:
            raise ValueError("subtraction set must be nonempty")
        if any(e < 1 for e in items):
            raise ValueError(f"subtraction set elements must be >= 1, got {items}")
        if len(set(items)) != len(items):
            raise ValueError(f"duplicate elements in subtraction set {items}")
        object.__setattr__(self, "elements", tuple(sorted(items)))

    @classmethod
    def parse(cls, text: str) -> SubtractionSet:
        """Parse a comma-separated list such as ``"1,3,7,8"``."""
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise ValueError(f"invalid subtraction set {text!r}: {exc}") from None

    @property
    def window(self) -> int:
        """Recurrence window length, ``max(S)``."""
        return self.elements[-1]

    @property
    def smallest(self) -> int:
        return self.elements[0]

    def without(self, element: int) -> SubtractionSet:
        return SubtractionSet(e for e in self.elements if e != element)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.elements, dtype=np.int64)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, item):
        return item in self.elements

    def __str__(self):
        return ",".join(map(str, self.elements))


def _as_set(moves) -> SubtractionSet:
    return moves if isinstance(moves, SubtractionSet) else SubtractionSet(moves)


def _check_length(length) -> int:
    length = operator.index(length)
    if length < 1:
        raise ValueError(f"sequence length must be >= 1, got {length}")
    return length


class OutcomeSequence:
    """P/N classification of positions ``0..length-1``; 0 = P, 1 = N.

    Stored as packed 64-bit words (bit ``p & 63`` of word ``p >> 6``).
    """

    def __init__(self, moves: SubtractionSet, words: np.ndarray, length: int):
        self.set = moves
        self.length = length
        words.flags.writeable = False
        self.words = words

    @cached_property
    def bits(self) -> np.ndarray:
        """One ``uint8`` per position."""
        raw = self.words.astype("<u8", copy=False).view(np.uint8)
        bits = np.unpackbits(raw, bitorder="little")[: self.length]
        bits.flags.writeable = False
        return bits

    def __len__(self):
        return self.length

    def __getitem__(self, index):
        if isinstance(index, slice):
            return self.bits[index]
        p = operator.index(index)
        if p < 0:
            p += self.length
        if not 0 <= p < self.length:
            raise IndexError(index)
        return int((int(self.words[p >> 6]) >> (p & 63)) & 1)

    def __eq__(self, other):
        if not isinstance(other, OutcomeSequence):
            return NotImplemented
        return (
            self.set == other.set
            and self.length == other.length
            and np.array_equal(self.words, other.words)
        )

    __hash__ = None

    def p_positions(self) -> np.ndarray:
        return np.flatnonzero(self.bits == 0)

    def to_string(self) -> str:
        return self.bits.tobytes().translate(bytes.maketrans(b"\x00\x01", b"01")).decode()

    def __repr__(self):
        head = self.to_string()[:32]
        more = "..." if self.length > 32 else ""
        return f"OutcomeSequence({self.set}, length={self.length}, bits={head}{more})"


class GrundySequence:
    """Sprague-Grundy values of positions ``0..len-1``."""

    __slots__ = ("set", "values")

    def __init__(self, moves: SubtractionSet, values: np.ndarray):
        self.set = moves
        values.flags.writeable = False
        self.values = values

    def __len__(self):
        return len(self.values)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return self.values[index]
        return int(self.values[index])

    def outcome_bits(self) -> np.ndarray:
        """Projection onto P/N: 0 where the Grundy value is 0, else 1."""
        return (self.values != 0).astype(np.uint8)

    def __repr__(self):
        head = " ".join(map(str, self.values[:16]))
        more = " ..." if len(self) > 16 else ""
        return f"GrundySequence({self.set}, values={head}{more})"


def outcome_sequence(moves, length: int) -> OutcomeSequence:
    """Outcome bits of the first ``length`` positions.

    Uses the packed block kernel; see :func:`subperiod.reference.naive_outcome`
    for the straightforward per-position version.
    """
    moves = _as_set(moves)
    length = _check_length(length)
    words, pad = _kernels.p_mask_words(moves.as_array(), length)
    first = pad // 64
    nwords = (length + 63) // 64
    out = ~words[first : first + nwords]
    tail = length & 63
    if tail:
        out[-1] &= np.uint64((1 << tail) - 1)
    return OutcomeSequence(moves, out, length)


def grundy_sequence(moves, length: int) -> GrundySequence:
    moves = _as_set(moves)
    length = _check_length(length)
    return GrundySequence(moves, _kernels.grundy_values(moves.as_array(), length))


def best_move(moves, position: int) -> int | None:
    """Smallest winning move from ``position``, or ``None`` at a P-position."""
    moves = _as_set(moves)
    position = operator.index(position)
    if position < 0:
        raise ValueError(f"position must be >= 0, got {position}")
    seq = outcome_sequence(moves, position + 1)
    if seq[position] == 0:
        return None
    for s in moves:
        if s <= position and seq[position - s] == 0:
            return s
    raise AssertionError("N-position without a move to a P-position")
