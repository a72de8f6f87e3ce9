"""Exception hierarchy.

Everything raised on purpose by this package derives from CurvaddError,
so callers can catch one type.  The CLI maps these onto exit codes:
ParseError -> 1, ValueError / CapExceeded -> 2, Inconsistent -> 3.
"""


class CurvaddError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(CurvaddError, ValueError):
    """Malformed expression or curve file.

    ``position`` is the 0-based character offset of the first offending
    character in the input string, or None when the error is not tied to
    a single position (e.g. a bad header line in a curve file).
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class CapExceeded(CurvaddError, RuntimeError):
    """An enumeration would exceed its cap; nothing was computed."""

    def __init__(self, what, needed, cap):
        super().__init__(f"{what} needs {needed} steps, cap is {cap}")
        self.what = what
        self.needed = needed
        self.cap = cap


class ContextMismatch(CurvaddError, ValueError):
    """Operands live in different field contexts."""


class Inconsistent(CurvaddError, RuntimeError):
    """Two routes that must agree did not, or a proven bound failed.

    This is never a user error: it means either an internal bug or an
    input that violates a hypothesis some conclusion depends on.  The
    message says which.
    """
