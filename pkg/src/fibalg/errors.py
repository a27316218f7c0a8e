class FibalgError(Exception):
    """Base class for errors raised by this package."""


class InputError(FibalgError, ValueError):
    """Bad arguments: mismatched dimensions, violated preconditions, malformed tables."""


class ExactDivisionError(FibalgError, ZeroDivisionError):
    pass


class UnsupportedOperation(FibalgError):
    """The algebra lacks the structure an operation needs (e.g. no conjugation)."""


class ConsistencyError(FibalgError):
    """Two independent evaluation routes disagreed. Always a bug, never a verdict."""
