"""Exception types and size limits shared across the package."""

import os

SUBSET_CAP_DEFAULT = 16
SUBSET_CAP_HARD = 20
SEARCH_CAP_HARD = 5
CANON_CAP = 8


class AGTopError(Exception):
    pass


class AGTParseError(AGTopError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotLeftInvertiveError(AGTopError):
    """Raised when an operation needs a validated (left-invertive) table."""

    def __init__(self, witness):
        self.witness = witness
        a, b, c = witness
        super().__init__(f"table is not left-invertive: ({a}*{b})*{c} != ({c}*{b})*{a}")


class CapExceededError(AGTopError):
    pass


class EmptySubsetError(AGTopError):
    pass


class UniverseMismatchError(AGTopError):
    pass


class KindMismatchError(AGTopError):
    """The subset handed to a family predicate is not a member of that family."""


class HypothesisNotMet(AGTopError):
    """A mathematical precondition (left identity, zero, ...) does not hold."""


def subset_cap():
    return _env_cap(SUBSET_CAP_DEFAULT, SUBSET_CAP_HARD)


def search_cap():
    return _env_cap(SEARCH_CAP_HARD, SEARCH_CAP_HARD)


def _env_cap(default, hard):
    raw = os.environ.get("AGTOP_MAX_N")
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return max(1, min(value, hard))
