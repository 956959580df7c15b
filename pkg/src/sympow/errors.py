"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for every error raised by this package."""


class UsageError(ToolkitError):
    """Invalid input: wrong ring, bad exponent, malformed instance, ..."""


class ParseError(UsageError):
    """Polynomial or ring text that does not match the grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NotProperError(UsageError):
    """An operation required a proper ideal but got the unit ideal."""


class CapExceededError(ToolkitError):
    """A configured resource cap was hit before the computation finished."""

    def __init__(self, cap: str, detail: str = ""):
        msg = f"resource cap exceeded: {cap}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.cap = cap


class InternalInconsistencyError(ToolkitError):
    """Two independent computations of the same object disagreed.

    Raised only on conditions that are mathematically impossible for
    correct code; seeing this means a bug, not a bad input.
    """
