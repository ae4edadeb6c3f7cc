"""Exception hierarchy shared across the package.

Three behavioural groups matter to callers (and fix the CLI exit codes):
``InputError`` for rejected parameters, ``BudgetExceeded`` for enumerations
whose estimated cost is over the configured cap, and ``InternalError`` for
defensive checks that should be unreachable on correct inputs.
"""

from __future__ import annotations


class InputError(ValueError):
    """Bad user-supplied parameters (CLI exit code 2)."""


class NotPrime(InputError):
    pass


class DegreeZero(InputError):
    pass


class FieldTooLarge(InputError):
    pass


class NotQuadraticExtension(InputError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


class DimensionMismatch(InputError):
    pass


class ParityMismatch(InputError):
    pass


class NotQuadratic(InputError):
    pass


class InvalidAlpha(InputError):
    pass


class EmptyPolytope(InputError):
    pass


class EmptyPointSet(InputError):
    pass


class DegreeTooLarge(InputError):
    pass


class HypothesisViolated(InputError):
    pass


class HOutOfRange(InputError):
    pass


class HTooLarge(InputError):
    pass


class InvalidParams(InputError):
    pass


class OutOfTheoremRange(InputError):
    """A closed-form prediction was requested outside its range of validity."""

    def __init__(self, message: str, hypothesis: str | None = None):
        super().__init__(message)
        self.hypothesis = hypothesis


class GeneralPositionFailure(InputError):
    pass


class BudgetExceeded(RuntimeError):
    """Estimated enumeration cost exceeds the budget (CLI exit code 3)."""

    def __init__(self, estimate: int, budget: int, what: str = "enumeration"):
        super().__init__(
            f"{what} needs ~{estimate} elementary operations, budget is {budget}"
        )
        self.estimate = estimate
        self.budget = budget


class InternalError(AssertionError):
    """Defensive invariant failure (CLI exit code 4)."""


class AmbiguousClassification(InternalError):
    pass


class UnexpectedDistance(InternalError):
    pass
