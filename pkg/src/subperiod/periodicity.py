"""Eventual-period detection with window certificates.

A subtraction game's next value depends only on the previous ``max(S)``
values. So if ``seq[q + p] == seq[q]`` holds for ``max(S)`` consecutive
positions starting at ``l``, induction gives it for every ``q >= l``. That
single window is the certificate.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .game import (
    GrundySequence,
    OutcomeSequence,
    SubtractionSet,
    _as_set,
    grundy_sequence,
    outcome_sequence,
)

DEFAULT_HORIZON_CAP = 2**20
HORIZON_CAP_ENV = "SUBPERIOD_HORIZON_CAP"


class HorizonExhausted(RuntimeError):
    """No certificate verified before the horizon cap was reached."""

    def __init__(self, moves: SubtractionSet, cap: int):
        self.set = moves
        self.cap = cap
        super().__init__(f"no period certificate for {{{moves}}} within horizon cap {cap}")


class SequenceTooShort(ValueError):
    pass


def default_horizon_cap() -> int:
    """The cap from ``$SUBPERIOD_HORIZON_CAP``, else ``DEFAULT_HORIZON_CAP``."""
    raw = os.environ.get(HORIZON_CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_HORIZON_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{HORIZON_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{HORIZON_CAP_ENV} must be positive, got {cap}")
    return cap


def initial_horizon(moves: SubtractionSet) -> int:
    return 4 * moves.window + 64


@dataclass(frozen=True)
class PeriodicityCertificate:
    preperiod: int
    period: int
    window: int
    horizon: int

    @property
    def span(self) -> int:
        """Positions needed to check the certificate: ``l + p + window``."""
        return self.preperiod + self.period + self.window


def _values(seq) -> np.ndarray:
    if isinstance(seq, OutcomeSequence):
        return seq.bits
    if isinstance(seq, GrundySequence):
        return seq.values
    arr = np.asarray(seq)
    if arr.ndim != 1:
        raise ValueError("sequence must be one-dimensional")
    if arr.dtype.kind not in "iub":
        raise TypeError(f"sequence must hold integers, got dtype {arr.dtype}")
    return arr.astype(np.int64, copy=False) if arr.dtype.kind == "b" else arr


def detect_period(seq, window: int) -> PeriodicityCertificate | None:
    """Minimal-period, then minimal-preperiod certificate for ``seq``.

    ``window`` must be ``max(S)`` of the game that produced ``seq``. Returns
    ``None`` when no (preperiod, period) pair fits with its window inside the
    sequence, meaning the horizon was too short.
    """
    if window < 1:
        raise ValueError(f"window must be positive, got {window}")
    values = _values(seq)
    n = len(values)
    if n < window + 1:
        raise SequenceTooShort(f"sequence of length {n} is shorter than window + 1 = {window + 1}")
    start, period = _kernels.minimal_period(values, window)
    if period < 0:
        return None
    return PeriodicityCertificate(int(start), int(period), window, n)


def verify_certificate(seq, cert: PeriodicityCertificate) -> bool:
    values = _values(seq)
    if cert.period < 1 or cert.preperiod < 0 or cert.window < 1:
        raise ValueError(f"malformed certificate {cert}")
    if len(values) < cert.span:
        raise SequenceTooShort(
            f"certificate needs {cert.span} positions, sequence has {len(values)}"
        )
    lo, hi, p = cert.preperiod, cert.preperiod + cert.window, cert.period
    return bool(np.array_equal(values[lo + p : hi + p], values[lo:hi]))


def _symbols(values) -> str:
    values = [int(v) for v in values]
    sep = "" if all(v < 10 for v in values) else ","
    return sep.join(map(str, values))


@dataclass(frozen=True)
class PeriodReport:
    set: SubtractionSet
    certificate: PeriodicityCertificate
    prefix: tuple[int, ...]
    periodic_block: tuple[int, ...]
    kind: str = "outcome"

    @property
    def preperiod(self) -> int:
        return self.certificate.preperiod

    @property
    def period(self) -> int:
        return self.certificate.period

    @property
    def horizon(self) -> int:
        return self.certificate.horizon

    @property
    def block(self) -> str:
        return _symbols(self.periodic_block)

    @property
    def notation(self) -> str:
        return format_linear_period(self)

    def as_record(self) -> dict:
        return {
            "set": list(self.set.elements),
            "preperiod": self.preperiod,
            "period": self.period,
            "block": self.block,
            "horizon": self.horizon,
        }


def format_linear_period(report: PeriodReport) -> str:
    """``PREFIX(BLOCK)``, e.g. ``(0111)`` or ``01011010111(11011010110)``."""
    return f"{_symbols(report.prefix)}({_symbols(report.periodic_block)})"


_SEQUENCES = {"outcome": outcome_sequence, "grundy": grundy_sequence}


def find_period(moves, horizon_cap: int | None = None, kind: str = "outcome") -> PeriodReport:
    """Compute the sequence with a doubling horizon until a certificate holds.

    The horizon starts at ``4 * max(S) + 64``. Raises :class:`HorizonExhausted`
    once the cap has been tried without success.
    """
    moves = _as_set(moves)
    try:
        compute = _SEQUENCES[kind]
    except KeyError:
        raise ValueError(f"kind must be 'outcome' or 'grundy', got {kind!r}") from None
    cap = default_horizon_cap() if horizon_cap is None else int(horizon_cap)
    horizon = initial_horizon(moves)
    if cap < horizon:
        raise ValueError(f"horizon cap {cap} is below the minimum {horizon} for {{{moves}}}")
    while True:
        seq = compute(moves, horizon)
        cert = detect_period(seq, moves.window)
        if cert is not None:
            values = _values(seq)
            start, p = cert.preperiod, cert.period
            return PeriodReport(
                set=moves,
                certificate=cert,
                prefix=tuple(int(v) for v in values[:start]),
                periodic_block=tuple(int(v) for v in values[start : start + p]),
                kind=kind,
            )
        if horizon >= cap:
            raise HorizonExhausted(moves, cap)
        horizon = min(2 * horizon, cap)
