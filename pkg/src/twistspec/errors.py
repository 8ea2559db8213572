"""Exception hierarchy shared by all modules.

Exit-code mapping used by the CLI: DomainError -> 2, NumericalError
(and subclasses) -> 3.
"""


class TwistspecError(Exception):
    """Base class for all library errors."""


class DomainError(TwistspecError, ValueError):
    """Input outside the mathematical domain of an operation."""


class NumericalError(TwistspecError, RuntimeError):
    """A numerical procedure failed (no bracket, no convergence, ...)."""


class AccuracyError(NumericalError):
    """Requested accuracy could not be certified; carries the estimate."""

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class ResourceError(NumericalError):
    """Problem size exceeds configured limits."""
