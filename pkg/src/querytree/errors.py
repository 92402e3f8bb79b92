"""Exception types shared across the package."""


class QueryTreeError(Exception):
    """Base class for all package-specific errors."""


class UnsolvableError(QueryTreeError):
    """No feasible decision tree exists for the given decision set."""


class AlphabetTooLargeError(QueryTreeError):
    """The requested exhaustive computation exceeds its size guard."""


class NoFeasibleMergeError(QueryTreeError):
    """The bottom-up merge search exhausted every merge order."""


class MergeBudgetExceededError(QueryTreeError):
    """The bottom-up merge search hit its attempt budget before finishing."""

    def __init__(self, message: str, attempts: int):
        super().__init__(message)
        self.attempts = attempts


class PartitionStuckError(QueryTreeError):
    """No query in the decision set splits the current candidate set."""
