# backend/tests/test_exit_status.py
import pytest

from config.interfaces.cli.exceptions import (
    EXIT_INDETERMINATE,
    EXIT_INTERNAL,
    EXIT_USAGE,
    command_error_for,
    exit_status_for,
)
from core.exceptions import (
    DigitMismatchError,
    DomainValidationError,
    InternalConsistencyError,
    NumericalIndeterminacyError,
    PrecisionError,
    ValidityRegionError,
)


@pytest.mark.parametrize(
    "exc, status",
    [
        (DomainValidationError("bad"), EXIT_USAGE),
        (ValidityRegionError("too close"), EXIT_USAGE),
        (NumericalIndeterminacyError("straddles"), EXIT_INDETERMINATE),
        (PrecisionError("wronskian"), EXIT_INDETERMINATE),
        (InternalConsistencyError("guard"), EXIT_INTERNAL),
        (DigitMismatchError("differ", from_collisions=1, from_series=2), EXIT_INTERNAL),
    ],
)
def test_exit_status_mapping(exc, status):
    assert exit_status_for(exc) == status
    assert command_error_for(exc).returncode == status


def test_command_error_is_one_line():
    error = command_error_for(DomainValidationError("first line\n  second line"))
    assert str(error) == "first line second line"
