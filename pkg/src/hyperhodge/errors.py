"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class VerificationError(Exception):
    """Two routes that must agree exactly did not.

    Carries the offending key (or parameter tuple) and both computed values so
    the failure can be reported without re-running anything.
    """

    def __init__(self, message, key=None, expected=None, computed=None):
        super().__init__(message)
        self.key = key
        self.expected = expected
        self.computed = computed
