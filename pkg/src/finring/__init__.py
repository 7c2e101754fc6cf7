"""Finite rings as dense tables, with UQ-ring analysis and an executable claim registry."""

from .analysis import RingProfile, classify, is_uj, is_uq, is_uu, jacobson_radical, quasinilpotents, units
from .errors import (
    AxiomViolation,
    EvalError,
    NotAGroupRing,
    NotAnIdeal,
    NotIdempotent,
    ParseError,
    PreconditionFailed,
    RingError,
    RingMismatch,
    SizeCapExceeded,
    UnknownClaim,
    VerificationFailed,
    ZeroIdempotent,
    ZeroRing,
)
from .kernel import Element, FiniteRing, Subset, TableRing, make_ring, materialize

__all__ = [
    "RingProfile", "classify", "is_uj", "is_uq", "is_uu", "jacobson_radical", "quasinilpotents", "units",
    "AxiomViolation", "EvalError", "NotAGroupRing", "NotAnIdeal", "NotIdempotent", "ParseError",
    "PreconditionFailed", "RingError", "RingMismatch", "SizeCapExceeded", "UnknownClaim",
    "VerificationFailed", "ZeroIdempotent", "ZeroRing",
    "Element", "FiniteRing", "Subset", "TableRing", "make_ring", "materialize",
]
