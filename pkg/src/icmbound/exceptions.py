# SPDX-License-Identifier: MIT
"""Custom exceptions for icmbound."""

from __future__ import annotations

from typing import Any


class IcmBoundError(Exception):
    """Base exception for all icmbound errors."""

    pass


class ConfigurationError(IcmBoundError):
    """Raised when there is a configuration issue."""

    pass


class InvalidInputError(IcmBoundError, ValueError):
    """Raised when an argument violates an operation's precondition."""

    pass


class LocalDataError(IcmBoundError):
    """Raised when caller-supplied local data is internally inconsistent.

    The typical trigger is an orbital value that comes out non-integral: the
    closed formulas only produce integers for coherent (q, shape, delta, rho)
    tuples, so a remainder means the tuple describes no actual order.
    """

    pass


class ClassificationError(IcmBoundError):
    """Raised when a structural fact about the Cappell-Shaneson family fails.

    The per-prime case split relies on facts such as "p | C_phi forces
    ord_p(Delta_phi) in {2, 3, 4}". They are checked on every prime rather
    than assumed, and a failure carries everything needed to reproduce it.
    """

    def __init__(self, message: str, *, m: int, p: int | None = None, details: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.m = m
        self.p = p
        self.details = details or {}


class BoundViolationError(IcmBoundError):
    """Raised when an exact ideal-class-monoid size exceeds a computed bound."""

    def __init__(self, message: str, *, record: Any) -> None:
        super().__init__(message)
        self.record = record
