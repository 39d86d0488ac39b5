"""Shared exception types.

Guards and budgets never produce a wrong answer: exceeding one raises,
and callers report the outcome as "unknown" rather than as a bound.
"""


class GuardExceeded(RuntimeError):
    """An enumeration or construction guard was exceeded."""


class BudgetExceeded(RuntimeError):
    """A solver exhausted its (deterministic) node budget before finishing."""


class WitnessError(ValueError):
    """A witness or input map failed verification."""
