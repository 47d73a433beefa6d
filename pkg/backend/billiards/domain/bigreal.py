# billiards/domain/bigreal.py
"""
Arbitrary-precision interval scalar.

Thin immutable wrapper over mpmath's raw interval routines (mpmath.libmp).
Every value carries its own working precision, so no global context is touched.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from mpmath import libmp, mp

from core.exceptions import DomainValidationError

_Raw = tuple  # raw mpf tuple (sign, mantissa, exponent, bitcount)


@dataclass(frozen=True)
class BigReal:
    lo: _Raw
    hi: _Raw
    prec: int

    def __post_init__(self):
        if self.prec < 2:
            raise DomainValidationError("Working precision must be at least 2 bits.")
        if libmp.mpf_gt(self.lo, self.hi):
            raise DomainValidationError("Interval endpoints out of order.")

    # --- constructors -------------------------------------------------------

    @classmethod
    def _wrap(cls, interval, prec: int) -> BigReal:
        lo, hi = interval
        return cls(lo=lo, hi=hi, prec=prec)

    @classmethod
    def pi(cls, prec: int) -> BigReal:
        lo = libmp.mpf_pi(prec, libmp.round_floor)
        hi = libmp.mpf_pi(prec, libmp.round_ceiling)
        return cls(lo=lo, hi=hi, prec=prec)

    @classmethod
    def from_int(cls, value: int, prec: int) -> BigReal:
        return cls.from_rational(Fraction(value), prec)

    @classmethod
    def from_rational(cls, value: Fraction | int, prec: int) -> BigReal:
        q = Fraction(value)
        lo = libmp.from_rational(q.numerator, q.denominator, prec, libmp.round_floor)
        hi = libmp.from_rational(q.numerator, q.denominator, prec, libmp.round_ceiling)
        return cls(lo=lo, hi=hi, prec=prec)

    # --- arithmetic ---------------------------------------------------------

    @property
    def _mpi(self):
        return (self.lo, self.hi)

    def _coerce(self, other) -> BigReal:
        if isinstance(other, BigReal):
            return other
        if isinstance(other, (int, Fraction)):
            return BigReal.from_rational(other, self.prec)
        return NotImplemented

    def _binary(self, other, op, swap: bool = False) -> BigReal:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = min(self.prec, other.prec)
        left, right = (other, self) if swap else (self, other)
        return BigReal._wrap(op(left._mpi, right._mpi, prec), prec)

    def __add__(self, other):
        return self._binary(other, libmp.mpi_add)

    def __radd__(self, other):
        return self._binary(other, libmp.mpi_add, swap=True)

    def __sub__(self, other):
        return self._binary(other, libmp.mpi_sub)

    def __rsub__(self, other):
        return self._binary(other, libmp.mpi_sub, swap=True)

    def __mul__(self, other):
        return self._binary(other, libmp.mpi_mul)

    def __rmul__(self, other):
        return self._binary(other, libmp.mpi_mul, swap=True)

    def __truediv__(self, other):
        other_value = self._coerce(other)
        if other_value is not NotImplemented and other_value.contains_zero:
            raise DomainValidationError("Division by an interval containing zero.")
        return self._binary(other, libmp.mpi_div)

    def __rtruediv__(self, other):
        if self.contains_zero:
            raise DomainValidationError("Division by an interval containing zero.")
        return self._binary(other, libmp.mpi_div, swap=True)

    def __neg__(self):
        return BigReal._wrap(libmp.mpi_neg(self._mpi), self.prec)

    def sqrt(self) -> BigReal:
        if libmp.mpf_lt(self.lo, libmp.fzero):
            raise DomainValidationError("Square root of a negative interval.")
        return BigReal._wrap(libmp.mpi_sqrt(self._mpi, self.prec), self.prec)

    def arctan(self) -> BigReal:
        return BigReal._wrap(libmp.mpi_atan(self._mpi, self.prec), self.prec)

    def arccot(self) -> BigReal:
        """arccot for positive arguments, computed as atan2(1, x)."""
        if not libmp.mpf_gt(self.lo, libmp.fzero):
            raise DomainValidationError("arccot is only supported for positive intervals.")
        one = BigReal.from_int(1, self.prec)
        return BigReal._wrap(libmp.mpi_atan2(one._mpi, self._mpi, self.prec), self.prec)

    # --- inspection ---------------------------------------------------------

    @property
    def contains_zero(self) -> bool:
        return libmp.mpf_le(self.lo, libmp.fzero) and libmp.mpf_ge(self.hi, libmp.fzero)

    def contains(self, other: BigReal | Fraction | int) -> bool:
        other = self._coerce(other)
        return libmp.mpf_le(self.lo, other.lo) and libmp.mpf_ge(self.hi, other.hi)

    @property
    def width(self):
        return mp.make_mpf(libmp.mpf_sub(self.hi, self.lo, self.prec, libmp.round_ceiling))

    @property
    def lower(self):
        return mp.make_mpf(self.lo)

    @property
    def upper(self):
        return mp.make_mpf(self.hi)

    def floor(self) -> Optional[int]:
        """Floor of the represented number, or None if the interval straddles an integer."""
        a = libmp.to_int(self.lo, libmp.round_floor)
        b = libmp.to_int(self.hi, libmp.round_floor)
        return a if a == b else None

    def ceil(self) -> Optional[int]:
        """Ceiling of the represented number, or None if it is not certain."""
        a = libmp.to_int(self.lo, libmp.round_ceiling)
        b = libmp.to_int(self.hi, libmp.round_ceiling)
        return a if a == b else None

    def ceil_minus_one(self) -> Optional[int]:
        ceiling = self.ceil()
        return None if ceiling is None else ceiling - 1

    def __str__(self) -> str:
        digits = max(int(self.prec * 0.30103), 5)
        return libmp.mpi_to_str(self._mpi, digits)
