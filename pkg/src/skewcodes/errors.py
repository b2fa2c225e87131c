"""Error types shared across the package."""


class FieldMismatchError(ValueError):
    """Raised when two values from incompatible fields are combined."""


class InvariantViolation(AssertionError):
    """An internal cross-check that must hold by theory failed (a bug)."""


class BudgetExceeded(RuntimeError):
    """An enumeration or search exceeded its configured budget."""
