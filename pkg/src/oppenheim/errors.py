"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the function being evaluated."""


class RegimeError(ValueError):
    """The requested operation does not exist for this parameter regime."""


class BracketError(RuntimeError):
    """A supposed bracket does not enclose a sign change."""


class ConvergenceError(RuntimeError):
    """A numerical procedure ran out of budget before reaching its tolerance."""


class PreconditionError(ValueError):
    pass


class EvaluationError(RuntimeError):
    """A checked function failed at a specific grid point."""

    def __init__(self, x, cause):
        super().__init__(f"evaluation failed at x={x!r}: {cause!r}")
        self.x = x
        self.cause = cause
