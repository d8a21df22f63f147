"""Exception types shared across the package."""


class ChateletError(Exception):
    """Base class for all package-specific errors."""


class FactoringExceededBudget(ChateletError):
    """An integer could not be fully factored within the configured budget.

    Callers must treat any result that depends on the missing factorization
    as unknown rather than guessing.
    """


class NotALocalSquare(ChateletError):
    """A p-adic square root was requested for a non-square."""


class DegenerateFiber(ChateletError):
    """A fiber of the surface pencil degenerated (inseparable or degree drop)."""


class InseparableInput(ChateletError):
    """A polynomial that must be separable has a repeated root."""


class PreconditionViolated(ChateletError):
    """An operation was called outside its stated precondition."""
