"""Exception hierarchy shared by the solvers and the command line."""

from __future__ import annotations


class RhoCapError(Exception):
    """Base class for every error raised by this package."""


class InputError(RhoCapError, ValueError):
    """Malformed input or an argument outside its documented domain."""


class CapExceeded(RhoCapError):
    """A size cap guarding exact search or graph construction was hit."""


class SearchTimeout(CapExceeded):
    """An exact search ran out of its time budget.

    ``best_lower`` is the best value certified before the budget ran out;
    it is a lower bound, never the answer.
    """

    def __init__(self, message: str, best_lower: int | None = None):
        super().__init__(message)
        self.best_lower = best_lower


class VerificationError(RhoCapError):
    """A family or code failed verification; ``pair`` names the culprits."""

    def __init__(self, message: str, pair=None):
        super().__init__(message)
        self.pair = pair
