"""Shared exception types."""


class ParseError(ValueError):
    """Malformed monomial input, in either the text or the JSON format."""


class NotCremonaError(ValueError):
    """An operation that requires a Cremona set was given something else."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree.

    This always signals a bug in the library, never bad input.
    """
