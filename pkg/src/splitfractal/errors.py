"""Exception hierarchy shared by every module of the package."""


class SplitFractalError(Exception):
    """Base class for all errors raised by splitfractal."""


class PreconditionError(SplitFractalError, ValueError):
    """An argument violates the documented precondition of an operation."""


class SpaceMismatchError(SplitFractalError, ValueError):
    """Operands live in different spaces (split interval vs split square, ...)."""


class ResourceLimitError(SplitFractalError):
    """A computation would exceed the configured piece/point cap."""

    def __init__(self, projected, cap, what="pieces"):
        self.projected = projected
        self.cap = cap
        super().__init__(f"projected {projected} {what} exceeds cap {cap}")


class InconsistencyError(SplitFractalError):
    """Two independent decision routes disagree; indicates a bug."""
