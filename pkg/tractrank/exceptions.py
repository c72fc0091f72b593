# coding=utf-8

"""Application errors."""

from typing import Optional


class TractRankError(ValueError):
    """Base class for every error raised by the application."""


class TagMismatch(TractRankError):
    """Values from different tracts, or of different shapes, were combined."""


class UnsupportedTract(TractRankError):
    """The requested operation has no decision procedure for the tract."""


class PreconditionViolation(TractRankError):
    """A documented precondition of an operation does not hold."""


class ConstructionFailure(TractRankError):
    """A construction could not produce, or could not verify, its output."""


class GuardConfigurationError(TractRankError):
    """The guard configuration is malformed."""


class GuardExceeded(TractRankError):
    """An input is larger than a configured size guard allows."""

    def __init__(self, guard: str, limit: int, value: int):
        self.guard = guard
        self.limit = limit
        self.value = value
        super().__init__(f"Guard '{guard}' exceeded: {value} > {limit}.")


class ParseError(TractRankError):
    """A text input could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"Line {line}: {message}"
        super().__init__(message)
