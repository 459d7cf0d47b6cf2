"""Exception types shared across the package."""


class DimensionMismatchError(ValueError):
    """Operands live in different ambient dimensions or have different caps."""


class GuardExceededError(ValueError):
    """A structural size guard (determinant dimension, contraction size) was hit."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the configured budget; nothing was truncated."""


class PreconditionError(RuntimeError):
    """A stated precondition of the requested check does not hold for this input."""


class MapFormatError(ValueError):
    """Syntax or validation error in a map file; carries the offending line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")
