"""Slow, obviously-correct versions of the fast paths, kept as test oracles.

``naive_outcome`` and ``naive_grundy`` are plain Python; ``naive_outcome_jit``
compiles the same per-position loop (no bit packing) for long runs.
"""
from __future__ import annotations

import numpy as np

from ._kernels import naive_outcome as _naive_outcome_compiled


def naive_outcome(moves, length: int) -> list[int]:
    moves = sorted(moves)
    bits: list[int] = []
    for p in range(length):
        bits.append(int(any(s <= p and bits[p - s] == 0 for s in moves)))
    return bits


def naive_outcome_jit(moves, length: int) -> np.ndarray:
    return _naive_outcome_compiled(np.asarray(sorted(moves), dtype=np.int64), length)


def naive_grundy(moves, length: int) -> list[int]:
    values: list[int] = []
    for p in range(length):
        reachable = {values[p - s] for s in moves if s <= p}
        v = 0
        while v in reachable:
            v += 1
        values.append(v)
    return values


def window_holds(seq, preperiod: int, period: int, window: int) -> bool:
    return all(seq[q + period] == seq[q] for q in range(preperiod, preperiod + window))


def naive_period(seq, window: int) -> tuple[int, int] | None:
    """Minimal ``(preperiod, period)`` by direct enumeration of every pair.

    Tries each period from 1 upward and, for it, each preperiod from 0 upward,
    accepting the first pair whose repetition window fits and holds.
    """
    seq = list(seq)
    n = len(seq)
    for p in range(1, n - window + 1):
        for start in range(0, n - p - window + 1):
            if window_holds(seq, start, p, window):
                return start, p
    return None
