"""Exception types shared across the package."""


class ListcolorError(Exception):
    """Base class for all package errors."""


class GraphParseError(ListcolorError):
    """Malformed graph6 input. Carries the byte offset of the bad byte."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class BudgetExceededError(ListcolorError):
    """An exhaustive search ran out of its node or time budget.

    Raised instead of returning a possibly-wrong answer.  ``partial`` may
    carry whatever intermediate state the caller wants to surface.
    """

    def __init__(self, message="search budget exceeded", partial=None):
        super().__init__(message)
        self.partial = partial
