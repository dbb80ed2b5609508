"""Closed-form period predictions for named families, checked against computation.

Families:

``EQ1``  two-element sets ``{s1, s2}``
``T1``   ``{1, 2, k}``
``T2``   ``{1, 3, k}``
``T3``   ``{1, k, k+1}``
``T4``   ``{s} + {(i+1)s + i : selector i is 1}``

Every prediction claims pure periodicity (preperiod 0). The harness does not
trust any formula: each record carries the certified period it was compared
with.
"""
from __future__ import annotations

import enum
import itertools
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .family import FamilyExpression
from .game import SubtractionSet, _as_set, outcome_sequence
from .periodicity import HorizonExhausted, PeriodReport, default_horizon_cap, find_period


class Family(str, enum.Enum):
    EQ1 = "EQ1"
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"


MATCH = "match"
PERIOD_MISMATCH = "period-mismatch"
PREPERIOD_MISMATCH = "preperiod-mismatch"
UNDEFINED = "undefined"

# "stated" is the formula as originally written; the default variants are the
# ones consistent with the tabulated data (T2, T3) or with exhaustive search (EQ1).
VARIANTS = {
    Family.EQ1: ("derived", "stated"),
    Family.T1: ("stated",),
    Family.T2: ("tabulated", "stated"),
    Family.T3: ("tabulated", "stated"),
    Family.T4: ("stated",),
}


@dataclass(frozen=True)
class FormulaPrediction:
    family: Family
    parameters: dict
    set: SubtractionSet
    predicted_period: int
    predicted_preperiod: int = 0
    note: str = ""

    def describe_parameters(self) -> str:
        parts = []
        for name, value in self.parameters.items():
            if isinstance(value, tuple):
                value = "".join(map(str, value)) or "-"
            parts.append(f"{name}={value}")
        return ",".join(parts)


def _check_variant(family: Family, variant: str) -> None:
    if variant not in VARIANTS[family]:
        raise ValueError(f"{family.value} has variants {VARIANTS[family]}, got {variant!r}")


def predict_t1(k: int) -> FormulaPrediction:
    """``{1,2,k}``: period ``k+1`` when 3 divides ``k``, otherwise 3."""
    if k < 3:
        raise ValueError(f"T1 needs k >= 3, got {k}")
    period = k + 1 if k % 3 == 0 else 3
    return FormulaPrediction(Family.T1, {"k": k}, SubtractionSet((1, 2, k)), period)


def predict_t2(k: int, variant: str = "tabulated") -> FormulaPrediction:
    """``{1,3,k}``: period ``k+3`` for even ``k`` and 2 for odd ``k``.

    The ``"stated"`` variant has the parity conditions the other way round;
    it disagrees with the tabulated rows and with computation.
    """
    _check_variant(Family.T2, variant)
    if k < 4:
        raise ValueError(f"T2 needs k >= 4, got {k}")
    long_case = k % 2 == 0 if variant == "tabulated" else k % 2 == 1
    period = k + 3 if long_case else 2
    note = "parity as tabulated" if variant == "tabulated" else "parity as stated (swapped)"
    return FormulaPrediction(Family.T2, {"k": k}, SubtractionSet((1, 3, k)), period, note=note)


def predict_t3(k: int, variant: str = "tabulated") -> FormulaPrediction:
    """``{1,k,k+1}``: period ``2k+1`` for odd ``k`` and ``2k`` for even ``k``."""
    _check_variant(Family.T3, variant)
    if k < 2:
        raise ValueError(f"T3 needs k >= 2, got {k}")
    odd = k % 2 == 1
    if variant == "stated":
        odd = not odd
    period = 2 * k + 1 if odd else 2 * k
    note = "parity as tabulated" if variant == "tabulated" else "parity as stated (swapped)"
    return FormulaPrediction(Family.T3, {"k": k}, SubtractionSet((1, k, k + 1)), period, note=note)


def t4_set(s: int, selectors: Sequence[int]) -> SubtractionSet:
    """``{s}`` plus ``(i+1)s + i`` for every 1-based ``i`` whose selector is 1."""
    if s < 1:
        raise ValueError(f"T4 needs s >= 1, got {s}")
    if any(b not in (0, 1) for b in selectors):
        raise ValueError(f"T4 selectors must be 0 or 1, got {list(selectors)}")
    extra = [(i + 1) * s + i for i, b in enumerate(selectors, start=1) if b]
    return SubtractionSet([s, *extra])


def predict_t4(s: int, selectors: Sequence[int] = ()) -> FormulaPrediction:
    selectors = tuple(int(b) for b in selectors)
    moves = t4_set(s, selectors)
    return FormulaPrediction(
        Family.T4, {"s": s, "selectors": selectors}, moves, 2 * s,
        note="selectors read as subset indicators",
    )


def predict_eq1(s1: int, s2: int, variant: str = "derived") -> FormulaPrediction:
    """``{s1, s2}``: period ``2*s1`` if ``s2/s1`` is an odd integer, else ``s1+s2``.

    The rule was confirmed by exhaustive search over ``s1 < s2 <= 60``. The
    ``"stated"`` variant uses the condition "ratio divisible by 3", with the
    ratio taken as ``s2/s1``; it fails on ``{1,6}`` and ``{1,9}`` among others.
    """
    _check_variant(Family.EQ1, variant)
    if not 0 < s1 < s2:
        raise ValueError(f"EQ1 needs 0 < s1 < s2, got s1={s1}, s2={s2}")
    ratio, rem = divmod(s2, s1)
    if variant == "derived":
        short = rem == 0 and ratio % 2 == 1
        note = "odd-multiple rule from exhaustive search"
    else:
        short = rem == 0 and ratio % 3 == 0
        note = "ratio divisible by 3, as stated"
    period = 2 * s1 if short else s1 + s2
    return FormulaPrediction(Family.EQ1, {"s1": s1, "s2": s2}, SubtractionSet((s1, s2)), period, note=note)


@dataclass(frozen=True)
class VerificationRecord:
    prediction: FormulaPrediction
    computed: PeriodReport | None
    status: str
    message: str = ""

    def as_record(self) -> dict:
        pred = self.prediction
        row = {
            "set": list(pred.set.elements),
            "preperiod": None,
            "period": None,
            "block": None,
            "horizon": None,
        }
        if self.computed is not None:
            row.update(self.computed.as_record())
        row.update(
            family=pred.family.value,
            params=pred.describe_parameters(),
            predicted=pred.predicted_period,
            status=self.status,
        )
        return row


def classify(prediction: FormulaPrediction, report: PeriodReport) -> str:
    if report.period != prediction.predicted_period:
        return PERIOD_MISMATCH
    if report.preperiod != prediction.predicted_preperiod:
        return PREPERIOD_MISMATCH
    return MATCH


def verify_prediction(prediction: FormulaPrediction, horizon_cap: int | None = None) -> VerificationRecord:
    try:
        report = find_period(prediction.set, horizon_cap)
    except HorizonExhausted as exc:
        return VerificationRecord(prediction, None, UNDEFINED, str(exc))
    return VerificationRecord(prediction, report, classify(prediction, report))


_PREDICTORS = {
    Family.EQ1: lambda args, variant: predict_eq1(*args, variant=variant),
    Family.T1: lambda k, variant: predict_t1(k),
    Family.T2: lambda k, variant: predict_t2(k, variant=variant),
    Family.T3: lambda k, variant: predict_t3(k, variant=variant),
    Family.T4: lambda args, variant: predict_t4(*args),
}


def predict(family, parameter, variant: str | None = None) -> FormulaPrediction:
    """Dispatch on family. ``parameter`` is ``k`` for T1-T3, ``(s1, s2)`` for
    EQ1 and ``(s, selectors)`` for T4."""
    family = Family(family)
    variant = variant or VARIANTS[family][0]
    _check_variant(family, variant)
    return _PREDICTORS[family](parameter, variant)


def verify_family(
    family,
    parameters: Iterable,
    *,
    variant: str | None = None,
    horizon_cap: int | None = None,
    workers: int = 1,
) -> list[VerificationRecord]:
    """One record per parameter, ordered by parameter.

    A horizon-cap failure becomes an ``undefined`` record; the batch goes on.
    """
    predictions = [predict(family, param, variant) for param in sorted(parameters, key=_sort_key)]
    if workers <= 1:
        return [verify_prediction(p, horizon_cap) for p in predictions]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda p: verify_prediction(p, horizon_cap), predictions))


def _sort_key(param):
    if isinstance(param, tuple):
        return tuple(tuple(x) if isinstance(x, (list, tuple)) else (x,) for x in param)
    return ((param,),)


def t4_parameters(s_values: Iterable[int], n: int) -> list[tuple[int, tuple[int, ...]]]:
    """Every ``(s, selectors)`` with ``len(selectors) == n``."""
    masks = list(itertools.product((0, 1), repeat=n))
    return [(s, mask) for s in s_values for mask in masks]


def eq1_parameters(s1_values: Iterable[int], s2_values: Iterable[int]) -> list[tuple[int, int]]:
    s2_values = list(s2_values)
    return [(a, b) for a in s1_values for b in s2_values if 0 < a < b]


def summarize(records: Iterable[VerificationRecord]) -> dict[str, int]:
    counts = {MATCH: 0, PERIOD_MISMATCH: 0, PREPERIOD_MISMATCH: 0, UNDEFINED: 0}
    for rec in records:
        counts[rec.status] += 1
    return counts


def redundant_elements(moves, horizon_cap: int | None = None) -> tuple[int, ...]:
    """Elements whose removal leaves the outcome sequence unchanged.

    Agreement is checked over the larger of the two certified spans
    (preperiod + period + window). That is enough: within that span the full
    sequence already satisfies the smaller set's recurrence at every position
    of one whole period, hence everywhere.
    """
    moves = _as_set(moves)
    if len(moves) < 2:
        raise ValueError("redundancy needs a set with at least two elements")
    full = find_period(moves, horizon_cap)
    covered = []
    for s in moves:
        rest = moves.without(s)
        reduced = find_period(rest, horizon_cap)
        span = max(full.certificate.span, reduced.certificate.span)
        if np.array_equal(outcome_sequence(moves, span).words, outcome_sequence(rest, span).words):
            covered.append(s)
    return tuple(covered)


@dataclass(frozen=True)
class ScanRecord:
    parameter: int
    set: SubtractionSet | None
    report: PeriodReport | None
    status: str
    message: str = field(default="")

    def as_record(self) -> dict:
        row = {
            "set": list(self.set.elements) if self.set is not None else None,
            "preperiod": None,
            "period": None,
            "block": None,
            "horizon": None,
        }
        if self.report is not None:
            row.update(self.report.as_record())
        row["status"] = self.status
        return row


def scan_family(expr, values: Iterable[int], horizon_cap: int | None = None) -> list[ScanRecord]:
    """Period of each instantiation of a family, in parameter order.

    Instantiations that are not valid sets get status ``skipped``; those with
    no certificate under the cap get ``horizon-exhausted``.
    """
    if isinstance(expr, str):
        expr = FamilyExpression.parse(expr)
    out = []
    for k in values:
        try:
            moves = expr.instantiate(k)
        except ValueError as exc:
            out.append(ScanRecord(k, None, None, "skipped", str(exc)))
            continue
        try:
            out.append(ScanRecord(k, moves, find_period(moves, horizon_cap), "ok"))
        except HorizonExhausted as exc:
            out.append(ScanRecord(k, moves, None, "horizon-exhausted", str(exc)))
    return out


def special_case_scan(expr, values: Iterable[int], horizon_cap: int | None = None) -> list[PeriodReport]:
    """Period reports, preperiods included, for every valid instantiation.

    Raises :class:`HorizonExhausted` if any instance fails to certify.
    """
    reports = []
    for rec in scan_family(expr, values, horizon_cap):
        if rec.status == "horizon-exhausted":
            raise HorizonExhausted(rec.set, horizon_cap or default_horizon_cap())
        if rec.report is not None:
            reports.append(rec.report)
    return reports
