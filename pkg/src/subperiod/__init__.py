"""Outcome and Grundy sequences of subtraction games, with certified periods."""
from .family import FamilyExpression, FamilyParseError, parse_range
from .game import (
    GrundySequence,
    OutcomeSequence,
    SubtractionSet,
    best_move,
    grundy_sequence,
    mex,
    outcome_sequence,
)
from .lab import (
    Family,
    FormulaPrediction,
    VerificationRecord,
    predict_eq1,
    predict_t1,
    predict_t2,
    predict_t3,
    predict_t4,
    redundant_elements,
    scan_family,
    special_case_scan,
    verify_family,
)
from .periodicity import (
    HorizonExhausted,
    PeriodicityCertificate,
    PeriodReport,
    SequenceTooShort,
    detect_period,
    find_period,
    format_linear_period,
    verify_certificate,
)

__version__ = "0.1.0"
