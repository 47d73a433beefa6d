# billiards/domain/special.py
"""
Real-order cylinder functions for the sector eigenmodes.

Values come from scipy.special and are accepted only when the Wronskian
J Y' - J' Y = 2/(pi x) holds to WRONSKIAN_TOLERANCE; failing points are
recomputed with mpmath before giving up.
"""

import logging
import math
from typing import Iterable

import mpmath
import numpy as np
from scipy import special

from billiards.domain.value_objects import CylinderValue
from core.exceptions import DomainValidationError, PrecisionError, ValidityRegionError

logger = logging.getLogger(__name__)

WRONSKIAN_TOLERANCE = 1e-10
FALLBACK_DPS = 40
ASYMPTOTIC_THRESHOLD = 10.0


def _validate(nu: float, xs: np.ndarray) -> None:
    if not nu >= 0:
        raise DomainValidationError(f"Order must be non-negative, got {nu}.")
    if xs.size == 0 or not np.all(xs > 0):
        raise DomainValidationError("Arguments must be positive.")


def _relative_residual(nu, x, j, y, jp, yp):
    expected = 2.0 / (np.pi * x)
    with np.errstate(invalid="ignore", over="ignore"):
        return np.abs(j * yp - jp * y - expected) / expected


def _high_precision_value(nu: float, x: float) -> CylinderValue:
    ctx = mpmath.MPContext()
    ctx.dps = FALLBACK_DPS
    order, arg = ctx.mpf(nu), ctx.mpf(x)
    j = ctx.besselj(order, arg)
    y = ctx.bessely(order, arg)
    jp = ctx.besselj(order, arg, derivative=1)
    yp = ctx.bessely(order, arg, derivative=1)
    exact_residual = abs(j * yp - jp * y - 2 / (ctx.pi * arg)) * ctx.pi * arg / 2

    values = [float(v) for v in (j, y, jp, yp)]
    residual = float(_relative_residual(nu, x, *values))
    if not math.isfinite(residual):
        residual = math.inf
    return CylinderValue(
        nu=nu,
        x=x,
        j=values[0],
        y=values[1],
        jp=values[2],
        yp=values[3],
        error_bound=max(residual, float(exact_residual)),
    )


def cylinder_values(nu: float, xs: Iterable[float]) -> list[CylinderValue]:
    """Certified J, Y, J', Y' of order nu at every argument in xs."""
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    _validate(nu, xs)

    j = special.jv(nu, xs)
    y = special.yv(nu, xs)
    jp = special.jvp(nu, xs)
    yp = special.yvp(nu, xs)
    residual = _relative_residual(nu, xs, j, y, jp, yp)

    values = []
    for i, x in enumerate(xs):
        if residual[i] <= WRONSKIAN_TOLERANCE:
            values.append(
                CylinderValue(
                    nu=nu,
                    x=float(x),
                    j=float(j[i]),
                    y=float(y[i]),
                    jp=float(jp[i]),
                    yp=float(yp[i]),
                    error_bound=float(residual[i]),
                )
            )
            continue

        logger.debug("cylinder_values: mpmath fallback at nu=%s x=%s", nu, x)
        value = _high_precision_value(nu, float(x))
        if not value.error_bound <= WRONSKIAN_TOLERANCE:
            raise PrecisionError(
                f"Cylinder functions of order {nu} at {x} not certified "
                f"(Wronskian residual {value.error_bound:.3e})."
            )
        values.append(value)
    return values


def cylinder_value(nu: float, x: float) -> CylinderValue:
    return cylinder_values(nu, [x])[0]


def cyl_j(nu: float, x: float) -> float:
    return cylinder_value(nu, x).j


def cyl_y(nu: float, x: float) -> float:
    return cylinder_value(nu, x).y


def hankel_asymptotic(nu: float, x: float) -> tuple[complex, complex]:
    """
    Leading large-argument form of (H1, H2).

    Only offered for x >= 10 max(1, nu**2); the relative error there is of
    the order of hankel_asymptotic_error_bound.
    """
    _validate(nu, np.atleast_1d(x))
    threshold = ASYMPTOTIC_THRESHOLD * max(1.0, nu**2)
    if x < threshold:
        raise ValidityRegionError(
            f"Asymptotic Hankel form needs x >= {threshold:g} for order {nu}, got {x}."
        )
    amplitude = math.sqrt(2.0 / (math.pi * x))
    phase = x - (nu + 0.5) * math.pi / 2
    h1 = amplitude * complex(math.cos(phase), math.sin(phase))
    return h1, h1.conjugate()


def hankel_asymptotic_error_bound(nu: float, x: float) -> float:
    """First neglected term of the large-argument expansion."""
    return abs(4 * nu**2 - 1) / (8 * x)


def radial_flux(nu: float, x: float) -> tuple[float, float]:
    """
    Radial currents (incident, outgoing) through the circle of radius x.

    The standing mode J = (H1 + H2)/2 is split into its Hankel parts; each
    carries x * Im(conj(f) f'). Incident is H1, outgoing H2.
    """
    value = cylinder_value(nu, x)
    parts = {
        "incident": (complex(value.j, value.y) / 2, complex(value.jp, value.yp) / 2),
        "outgoing": (complex(value.j, -value.y) / 2, complex(value.jp, -value.yp) / 2),
    }
    flux = {name: x * (f.conjugate() * df).imag for name, (f, df) in parts.items()}
    return flux["incident"], flux["outgoing"]
