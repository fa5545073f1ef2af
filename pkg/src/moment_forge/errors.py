"""Exception types shared across the package.

All errors raised on purpose by this package derive from MomentForgeError,
so callers can catch one type at the CLI boundary.  ValueError mixins keep
the usual Python semantics for bad arguments.
"""


class MomentForgeError(Exception):
    """Base class for every deliberate error in this package."""


class DomainError(MomentForgeError, ValueError):
    """An argument is outside the documented domain of an operation."""


class CapacityError(MomentForgeError):
    """A request exceeds a table bound or an unbuildable table size."""


class PoleError(MomentForgeError):
    """Evaluation at (or too near) a pole of the underlying function.

    Carries the offending location when known; the message states how to
    perturb the inputs when a perturbation is the intended workaround.
    """

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class BudgetError(MomentForgeError):
    """An enumeration would exceed its configured work budget.

    ``suggestion`` holds a human-readable way out (shrink X, raise T,
    raise the budget, or switch strategy).
    """

    def __init__(self, message, suggestion=None):
        if suggestion:
            message = f"{message} ({suggestion})"
        super().__init__(message)
        self.suggestion = suggestion
