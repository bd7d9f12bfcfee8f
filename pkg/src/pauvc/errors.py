"""Shared exception types."""


class PauvcError(Exception):
    """Base class for all library-specific errors."""


class ParseError(PauvcError):
    """Malformed DIMACS or JSON input."""


class LimitExceeded(PauvcError):
    """A configured resource limit (vertices, results, time) was hit."""
