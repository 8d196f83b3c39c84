"""Exception hierarchy. The CLI maps these onto exit codes."""


class UsageError(ValueError):
    """Inconsistent arguments, e.g. mixing rings or fields."""


class ParseError(UsageError):
    """Malformed text input. ``position`` is 1-based; len(text) + 1 means end of input."""

    def __init__(self, message, position=None, text=None):
        self.message = message
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class PreconditionError(ValueError):
    """An operation was called outside its domain (e.g. socle of a non m-primary ideal)."""


class DimensionError(PreconditionError):
    """The ideal is not zero-dimensional."""


class VerificationError(AssertionError):
    """A verification check failed; the message names the check."""
