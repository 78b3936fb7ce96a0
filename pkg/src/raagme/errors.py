"""Exception types shared by all raagme modules."""


class RaagmeError(Exception):
    """Base class for all errors raised by this package."""


class InputError(RaagmeError):
    """Malformed or out-of-contract input data (unknown vertex, bad rank, ...)."""


class DomainError(RaagmeError):
    """A mathematical hypothesis of the requested operation is violated.

    The message always names the violated hypothesis, e.g. that the outer
    automorphism group must be finite, or that strong untransvectability is
    only defined for untransvectable vertices.
    """


class ParseError(InputError):
    """Syntactically invalid input document."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
