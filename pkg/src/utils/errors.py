# src/utils/errors.py
from enum import IntEnum
from typing import Any, Optional


class ExitCode(IntEnum):
    """Process exit codes used by the command line surface"""

    OK = 0
    USAGE = 1
    INFEASIBLE = 2
    VERIFICATION_FAILED = 3


class JugglingError(Exception):
    """Base class for every error raised by this package"""

    exit_code: ExitCode = ExitCode.USAGE


class UsageError(JugglingError):
    """Arguments parsed but do not make sense together"""


class InvalidComposition(JugglingError, ValueError):
    """A composition or partition with a zero, negative or misordered part"""


class InvalidCard(JugglingError, ValueError):
    """Card sides and embedding indices are inconsistent"""


class DimensionMismatch(JugglingError, ValueError):
    """Matrix operands are not conformable"""


class InfeasibleRequest(JugglingError):
    """A feasibility guard refused the request"""

    exit_code = ExitCode.INFEASIBLE

    def __init__(self, guard: str, limit: int, requested: int, hint: str = ""):
        self.guard = guard
        self.limit = limit
        self.requested = requested
        message = f"{guard}: requested {requested} exceeds limit {limit}"
        if hint:
            message += f" ({hint})"
        message += "; pass --force to run anyway"
        super().__init__(message)


class ExactnessError(JugglingError, ArithmeticError):
    """An exact identity or division that must hold did not"""

    exit_code = ExitCode.VERIFICATION_FAILED


class NotDivisible(JugglingError, ArithmeticError):
    """Polynomial division left a nonzero remainder"""

    exit_code = ExitCode.VERIFICATION_FAILED

    def __init__(
        self,
        dividend: Any,
        divisor: Any,
        remainder: Any,
        quotient: Optional[Any] = None,
    ):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        self.quotient = quotient
        super().__init__(f"{divisor} does not divide {dividend}: remainder {remainder}")


def check_guard(
    guard: str, requested: int, limit: int, force: bool = False, hint: str = ""
) -> None:
    """Raise InfeasibleRequest when requested > limit and force is off"""
    if not force and requested > limit:
        raise InfeasibleRequest(guard, limit, requested, hint)
