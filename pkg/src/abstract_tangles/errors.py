"""Exception types raised across the package."""


class TangleError(Exception):
    """Base class for all errors raised by this package."""


class SameUnderlyingSeparation(TangleError, ValueError):
    pass


class DuplicateSeparation(TangleError, ValueError):
    pass


class UnknownLabel(TangleError, KeyError):
    pass


class NonAntisymmetricQuery(TangleError, ValueError):
    pass


class AlreadyOriented(TangleError, ValueError):
    pass


class InvalidSeed(TangleError, ValueError):
    pass


class NotAStarSystem(TangleError, ValueError):
    pass


class MissingTraceEntry(TangleError, KeyError):
    pass


class NoDistinguisher(TangleError, ValueError):
    pass


class NotCrossing(TangleError, ValueError):
    pass


class NotDistinguishing(TangleError, ValueError):
    pass


class InvalidReplacement(TangleError, ValueError):
    pass


class UnknownTangle(TangleError, KeyError):
    pass


class CapExceeded(TangleError, RuntimeError):
    pass


class StepBudgetExceeded(TangleError, RuntimeError):
    pass


class InvariantViolation(TangleError, AssertionError):
    """An internal invariant of an algorithm failed (indicates a bug or unmet hypotheses)."""
