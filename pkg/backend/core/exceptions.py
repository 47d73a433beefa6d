# core/exceptions.py


class DomainError(Exception):
    """Base class for all domain-level errors."""


class DomainValidationError(DomainError):
    """Input outside the domain of an operation (exit status 2)."""


class ValidityRegionError(DomainValidationError):
    """An asymptotic form was requested outside its region of validity."""


class NumericalIndeterminacyError(DomainError):
    """A result could not be certified before the precision ceiling (exit status 3)."""


class PrecisionError(NumericalIndeterminacyError):
    """Requested accuracy is not achievable for a special-function value."""


class InternalConsistencyError(DomainError):
    """A property guaranteed by theory did not hold."""


class DigitMismatchError(InternalConsistencyError):
    """The two independent digit extractions disagree."""

    def __init__(self, message: str, *, from_collisions: int, from_series: int) -> None:
        super().__init__(message)
        self.from_collisions = from_collisions
        self.from_series = from_series
