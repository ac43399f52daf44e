"""Exception types shared across the package."""


class PeaError(Exception):
    """Base class for every error raised by this package."""


class StructuralError(PeaError):
    """A table is malformed: indices out of range, wrong field sizes."""


class ParseError(PeaError):
    """An algebra file could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DomainError(PeaError):
    """A precondition on caller-supplied arguments does not hold."""


class InvariantViolation(PeaError):
    """An internal consistency check failed.

    Raised when two independent routes that must agree disagree, or when a
    law that holds in every valid algebra fails.  Signals a bug in this
    package, never a bad input.
    """


class ResourceError(PeaError):
    """A configured resource bound was exceeded.

    ``partial`` carries whatever results were produced before the cutoff.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
