"""Exception hierarchy shared by every module."""

from __future__ import annotations


class RingError(Exception):
    """Base class for all errors raised by finring."""


class AxiomViolation(RingError):
    """A ring or group axiom failed; ``witness`` holds the offending indices."""

    def __init__(self, kind: str, witness: tuple[int, ...]):
        self.kind = kind
        self.witness = tuple(int(w) for w in witness)
        super().__init__(f"{kind} fails at {self.witness}")


class ZeroRing(RingError):
    pass


class RingMismatch(RingError):
    pass


class SizeCapExceeded(RingError):
    def __init__(self, what: str, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class NotIdempotent(RingError):
    pass


class ZeroIdempotent(RingError):
    pass


class NotAnIdeal(RingError):
    pass


class NotAGroupRing(RingError):
    pass


class VerificationFailed(RingError):
    """An explicit map failed a homomorphism check."""

    def __init__(self, message: str, witness: tuple[int, ...] = ()):
        self.witness = tuple(int(w) for w in witness)
        super().__init__(f"{message} (witness {self.witness})" if witness else message)


class PreconditionFailed(RingError):
    pass


class UnknownClaim(RingError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class ParseError(RingError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class EvalError(RingError):
    pass
