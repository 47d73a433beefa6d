# config/interfaces/cli/exceptions.py
from django.core.management.base import CommandError

from core.exceptions import (
    DomainError,
    DomainValidationError,
    NumericalIndeterminacyError,
)

EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_INDETERMINATE = 3


def exit_status_for(exc: DomainError) -> int:
    """
    Maps domain-level errors to process exit statuses.
    """

    # Bad input or asymptotic form out of range → 2
    if isinstance(exc, DomainValidationError):
        return EXIT_USAGE

    # Floor or cylinder value not certified → 3
    if isinstance(exc, NumericalIndeterminacyError):
        return EXIT_INDETERMINATE

    # Digit mismatch, non-termination and anything else → 1
    return EXIT_INTERNAL


def command_error_for(exc: DomainError) -> CommandError:
    """One-line diagnostic carrying the mapped exit status."""
    message = " ".join(str(exc).split()) or exc.__class__.__name__
    return CommandError(message, returncode=exit_status_for(exc))
