"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed word, matrix, or stone-word input."""


class DomainError(ValueError):
    """Input violates a precondition of the requested operation."""


class BudgetError(RuntimeError):
    """Requested computation exceeds the configured resource budget."""
