# billiards/domain/geometry.py
"""
Configuration-space transform shared by every model.

The two-body problem on a half-line maps to a free particle in a planar wedge
through mass-scaled polar coordinates:

    sqrt(M) x = rho cos(theta),   sqrt(m) y = rho sin(theta)

The admissible region 0 <= y <= x becomes 0 <= theta <= beta with
beta = arccot(sqrt(M/m)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

from core.exceptions import DomainValidationError

if TYPE_CHECKING:
    from billiards.domain.value_objects import BilliardParams


def beta_of_ratio(R: float) -> float:
    """Wedge angle arccot(R) in (0, pi/2]; R = 0 gives pi/2."""
    if R < 0 or math.isnan(R):
        raise DomainValidationError(f"Mass-ratio root must be non-negative, got {R}.")
    if R == 0:
        return math.pi / 2
    return math.atan2(1.0, R)


@dataclass(frozen=True)
class PolarPoint:
    rho: float
    theta: float

    def __post_init__(self):
        if self.rho < 0:
            raise DomainValidationError("Radial coordinate must be non-negative.")


def to_polar(x: float, y: float, params: BilliardParams) -> PolarPoint:
    """
    Map ball positions (big ball at x, small ball at y) to the wedge.

    The origin is mapped to (0, 0) by convention.
    """
    if y < 0:
        raise DomainValidationError(f"Small ball behind the wall: y={y}.")
    if y > x:
        raise DomainValidationError(f"Balls overlap: y={y} > x={x}.")

    sx = math.sqrt(params.M) * x
    sy = math.sqrt(params.m) * y
    if sx == 0 and sy == 0:
        return PolarPoint(rho=0.0, theta=0.0)
    return PolarPoint(rho=math.hypot(sx, sy), theta=math.atan2(sy, sx))


def from_polar(point: PolarPoint, params: BilliardParams) -> tuple[float, float]:
    """Inverse of :func:`to_polar`."""
    x = point.rho * math.cos(point.theta) / math.sqrt(params.M)
    y = point.rho * math.sin(point.theta) / math.sqrt(params.m)
    return x, y
