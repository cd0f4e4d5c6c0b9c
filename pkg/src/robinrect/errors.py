"""Exception hierarchy shared by all robinrect modules.

The CLI maps these onto exit codes: bad arguments / domain violations
exit with 2, capacity refusals with 3, numerical failures with 4.
"""


class RobinRectError(Exception):
    """Base class for all robinrect errors."""


class DomainError(RobinRectError, ValueError):
    """An argument is outside the documented domain of an operation."""


class CapacityError(RobinRectError, RuntimeError):
    """A computation was refused because it would exceed a resource budget."""

    def __init__(self, message, estimated_records=None):
        super().__init__(message)
        self.estimated_records = estimated_records


class NumericalError(RobinRectError, RuntimeError):
    """A numerical procedure failed to reach its contract."""


class PrecisionError(NumericalError):
    """Requested inputs exhaust 64-bit floating-point precision."""


class BracketError(NumericalError):
    """A sign-change bracket required by a root search does not exist."""

    def __init__(self, message, f_lo=None, f_hi=None):
        super().__init__(message)
        self.f_lo = f_lo
        self.f_hi = f_hi


class NoWitnessError(NumericalError):
    """A scan ended without finding the requested witness."""

    def __init__(self, message, best_n1=None, best_frac=None):
        super().__init__(message)
        self.best_n1 = best_n1
        self.best_frac = best_frac
