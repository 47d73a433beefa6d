# billiards/domain/classical.py
"""
Classical Galperin billiard: event-driven simulation, closed-form collision
count and certified digit extraction.
"""

import logging
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Optional, Union

import numpy as np

from billiards.domain.bigreal import BigReal
from billiards.domain.geometry import to_polar
from billiards.domain.semiclassical import alpha_of
from billiards.domain.value_objects import (
    BilliardParams,
    ClassicalState,
    CollisionEvent,
    CollisionKind,
    CollisionTrace,
    CurveSeries,
)
from core.exceptions import (
    DigitMismatchError,
    DomainValidationError,
    InternalConsistencyError,
    NumericalIndeterminacyError,
)

logger = logging.getLogger(__name__)

EXACT_RATIO_LIMIT = Fraction(10**4)
TIE_TOLERANCE = 1e-12
ENERGY_DRIFT_WARNING = 1e-10
ENERGY_DRIFT_LIMIT = 1e-6
DEFAULT_MAX_PREC = 1 << 16
DEFAULT_MAX_GUARD_DIGITS = 4096


# ==============================
# CLOSED FORM
# ==============================


def count_closed_form(beta: Union[float, BigReal]) -> Optional[int]:
    """
    Number of collisions for wedge angle beta: ceil(pi/beta) - 1.

    For a float, quotients within TIE_TOLERANCE of an integer are taken as
    that integer. For a BigReal, None is returned when the interval for
    pi/beta straddles an integer.
    """
    if isinstance(beta, BigReal):
        if not beta.lower > 0:
            raise DomainValidationError("Wedge angle must be positive.")
        return (BigReal.pi(beta.prec) / beta).ceil_minus_one()

    if not beta > 0:
        raise DomainValidationError(f"Wedge angle must be positive, got {beta}.")
    quotient = math.pi / beta
    nearest = round(quotient)
    if abs(quotient - nearest) <= TIE_TOLERANCE * quotient:
        return nearest - 1
    return math.ceil(quotient) - 1


# ==============================
# EVENT-DRIVEN SIMULATION
# ==============================


class _ExactVelocities:
    """
    Velocities as integer numerators over a shared positive scale L*(P+Q)**k.

    With M:m = P:Q every elastic update stays integral, so comparisons are exact.
    """

    mode = "exact"

    def __init__(self, params: BilliardParams, vx: Fraction, vy: Fraction) -> None:
        ratio = params.exact_ratio
        self._p, self._q = ratio.numerator, ratio.denominator
        scale = math.lcm(vx.denominator, vy.denominator)
        self._x = int(vx * scale)
        self._y = int(vy * scale)
        self._scale = scale

    @property
    def approaching(self) -> bool:
        return self._x < self._y

    @property
    def toward_wall(self) -> bool:
        return self._y < 0

    def ball_ball(self) -> None:
        p, q = self._p, self._q
        self._x, self._y = (
            (p - q) * self._x + 2 * q * self._y,
            2 * p * self._x + (q - p) * self._y,
        )
        self._scale *= p + q

    def wall(self) -> None:
        self._y = -self._y

    def as_floats(self) -> tuple[float, float]:
        return self._x / self._scale, self._y / self._scale


class _FloatVelocities:
    mode = "float"

    def __init__(self, params: BilliardParams, vx: float, vy: float) -> None:
        M, m = float(params.M), float(params.m)
        self._a = (M - m) / (M + m)
        self._b = 2 * m / (M + m)
        self._c = 2 * M / (M + m)
        self._vx, self._vy = float(vx), float(vy)

    @property
    def approaching(self) -> bool:
        return self._vx < self._vy

    @property
    def toward_wall(self) -> bool:
        return self._vy < 0

    def ball_ball(self) -> None:
        vx, vy = self._vx, self._vy
        self._vx = self._a * vx + self._b * vy
        self._vy = self._c * vx - self._a * vy

    def wall(self) -> None:
        self._vy = -self._vy

    def as_floats(self) -> tuple[float, float]:
        return self._vx, self._vy


def _as_fraction(value: Real) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def simulate(
    params: BilliardParams,
    v0: Real = 1,
    x0: Real = 10,
    y0: Real = 1,
    u0: Real = 0,
) -> CollisionTrace:
    """
    Run the billiard until neither a wall hit nor a ball-ball collision can follow.

    The big ball starts at x0 moving toward the wall with speed v0; the small
    ball starts at y0 moving toward the wall with speed u0 (0 is the standard
    incidence).
    """
    if not v0 > 0:
        raise DomainValidationError("Initial big-ball speed v0 must be positive.")
    if not x0 > y0 > 0:
        raise DomainValidationError("Initial positions must satisfy x0 > y0 > 0.")
    if not 0 <= u0 < v0:
        raise DomainValidationError("Small-ball speed must satisfy 0 <= u0 < v0.")
    if u0 > 0 and _as_fraction(x0) * _as_fraction(u0) == _as_fraction(y0) * _as_fraction(v0):
        raise DomainValidationError("Trajectory runs into the corner (triple collision).")

    vx0, vy0 = -_as_fraction(v0), -_as_fraction(u0)
    if params.exact_ratio <= EXACT_RATIO_LIMIT:
        velocities = _ExactVelocities(params, vx0, vy0)
    else:
        velocities = _FloatVelocities(params, float(vx0), float(vy0))

    initial = ClassicalState(t=0.0, x=float(x0), y=float(y0), vx=float(vx0), vy=float(vy0))
    energy0 = initial.kinetic_energy(params)
    guard = 10 * math.ceil(math.pi / params.beta)
    drift_reported = False

    logger.debug(
        "simulate: mode=%s ratio=%s guard=%s", velocities.mode, params.exact_ratio, guard
    )

    events: list[CollisionEvent] = []
    state = initial
    while velocities.approaching or velocities.toward_wall:
        if len(events) >= guard:
            raise InternalConsistencyError(
                f"Collision count exceeded {guard}; the billiard should have terminated."
            )

        vx, vy = state.vx, state.vy
        dt_wall = state.y / -vy if velocities.toward_wall else math.inf
        dt_ball = (
            (state.x - state.y) / max(vy - vx, sys.float_info.min)
            if velocities.approaching
            else math.inf
        )

        if dt_wall <= dt_ball:
            kind = CollisionKind.BALL_WALL
            x = state.x + vx * dt_wall
            t, y = state.t + dt_wall, 0.0
            velocities.wall()
        else:
            kind = CollisionKind.BALL_BALL
            x = state.x + vx * dt_ball
            t, y = state.t + dt_ball, x
            velocities.ball_ball()

        new_vx, new_vy = velocities.as_floats()
        state = ClassicalState(t=t, x=x, y=y, vx=new_vx, vy=new_vy)
        events.append(CollisionEvent(index=len(events) + 1, kind=kind, t=t, state_after=state))

        drift = abs(state.kinetic_energy(params) - energy0) / energy0
        if drift > ENERGY_DRIFT_LIMIT:
            raise InternalConsistencyError(f"Energy drift {drift:.3e} after event {len(events)}.")
        if drift > ENERGY_DRIFT_WARNING and not drift_reported:
            logger.warning("simulate: energy drift %.3e at event %s", drift, len(events))
            drift_reported = True

    return CollisionTrace(
        params=params,
        initial=initial,
        events=tuple(events),
        mode=velocities.mode,
    )


def bisector_speed(params: BilliardParams, v0: float = 1.0) -> float:
    """
    Small-ball speed that makes the unfolded incoming ray bisect the wedge.

    Such a trajectory is symmetric about its turning point and has
    floor(pi/beta + 1/2) collisions.
    """
    return v0 * params.R * math.tan(params.beta / 2)


# ==============================
# CLASSICAL CURVE
# ==============================


def trajectory_invariants(trace: CollisionTrace) -> tuple[float, float, float]:
    """
    Turning time, minimal radius and speed of the unfolded straight line.

    Reflections are isometries of the unfolding, so these follow from the
    initial state alone.
    """
    M, m = float(trace.params.M), float(trace.params.m)
    s = trace.initial
    speed_sq = M * s.vx**2 + m * s.vy**2
    dot = M * s.x * s.vx + m * s.y * s.vy
    rho0_sq = M * s.x**2 + m * s.y**2
    t_star = -dot / speed_sq
    rho_min = math.sqrt(max(rho0_sq - dot * dot / speed_sq, 0.0))
    return t_star, rho_min, math.sqrt(speed_sq)


def _radial_sign(state: ClassicalState, params: BilliardParams) -> int:
    radial = float(params.M) * state.x * state.vx + float(params.m) * state.y * state.vy
    return int(np.sign(radial))


def collision_alphas(trace: CollisionTrace) -> list[float]:
    """Normalized time of every collision in the trace."""
    _, rho_min, _ = trajectory_invariants(trace)
    alphas = []
    for event in trace.events:
        s = event.state_after
        rho = max(to_polar(s.x, s.y, trace.params).rho, rho_min)
        alphas.append(alpha_of(rho, rho_min, _radial_sign(s, trace.params)))
    return alphas


def classical_curve(
    params: BilliardParams,
    v0: Real = 1,
    x0: Real = 10,
    y0: Real = 1,
    samples: int = 1000,
    u0: Real = 0,
) -> CurveSeries:
    """Normalized small-ball position y/x against the normalized time alpha."""
    if samples < 2:
        raise DomainValidationError("At least two samples are required.")

    trace = simulate(params, v0=v0, x0=x0, y0=y0, u0=u0)
    t_star, rho_min, speed = trajectory_invariants(trace)

    alphas = -np.pi / 2 + (np.arange(samples) + 0.5) * np.pi / samples
    points = []
    for alpha in alphas:
        state = trace.state_at(t_star + rho_min * math.tan(alpha) / speed)
        points.append((float(alpha), state.y / state.x))

    return CurveSeries(
        abscissa="alpha",
        ordinate="y_over_x",
        model="classical",
        label="n",
        label_value=None,
        points=tuple(points),
        metadata={
            "beta": params.beta,
            "collisions": trace.count,
            "collision_alphas": collision_alphas(trace),
            "rho_min": rho_min,
            "mode": trace.mode,
            "u0": float(u0),
        },
    )


# ==============================
# DIGITS OF PI
# ==============================


@dataclass(frozen=True)
class DigitCertificate:
    N: int
    value: int
    precision_bits: int
    guard_digits: int


def collision_digits(N: int, max_prec: int = DEFAULT_MAX_PREC) -> tuple[int, int]:
    """
    Certified ceil(pi/beta) - 1 at beta = arccot(10**N).

    Returns the count and the working precision (bits) that certified it.
    """
    if N == 0:
        # arccot(1) = pi/4 exactly: pi/beta is the integer 4
        return count_closed_form(math.pi / 4), 0

    prec = 64 + 10 * N
    while prec <= max_prec:
        beta = BigReal.from_int(10**N, prec).arccot()
        count = count_closed_form(beta)
        if count is not None:
            return count, prec
        logger.debug("collision_digits: N=%s not certified at %s bits", N, prec)
        prec *= 2

    raise NumericalIndeterminacyError(
        f"Collision count for N={N} not certified below {max_prec} bits."
    )


def _arctan_inverse(x: int, scale: int) -> tuple[int, int]:
    """
    scale * arctan(1/x) in fixed point.

    Every term is a nested floor and so is off by less than one; the tail
    after the last non-zero term is below one. Returns (value, terms).
    """
    total = 0
    power = scale // x
    x_sq = x * x
    k = 0
    while power:
        term = power // (2 * k + 1)
        total += -term if k % 2 else term
        power //= x_sq
        k += 1
    return total, k


def machin_digits(N: int, max_guard: int = DEFAULT_MAX_GUARD_DIGITS) -> tuple[int, int]:
    """
    floor(pi * 10**N) from pi = 16 arctan(1/5) - 4 arctan(1/239).

    Returns the value and the number of guard digits that certified it.
    """
    guard = 10
    while guard <= max_guard:
        scale = 10 ** (N + guard)
        a5, terms5 = _arctan_inverse(5, scale)
        a239, terms239 = _arctan_inverse(239, scale)
        approx = 16 * a5 - 4 * a239
        error = 16 * (terms5 + 1) + 4 * (terms239 + 1)
        low = (approx - error) // 10**guard
        high = (approx + error) // 10**guard
        if low == high:
            return low, guard
        guard *= 2

    raise NumericalIndeterminacyError(
        f"Series value for N={N} not certified with {max_guard} guard digits."
    )


def pi_digits(N: int, max_prec: int = DEFAULT_MAX_PREC) -> DigitCertificate:
    """
    floor(pi * 10**N), certified by two independent computations.

    The collision count at beta = arccot(10**N) and the Machin series must agree.
    """
    if not isinstance(N, int) or N < 0:
        raise DomainValidationError("N must be a non-negative integer.")

    from_collisions, prec = collision_digits(N, max_prec=max_prec)
    from_series, guard = machin_digits(N)

    if from_collisions != from_series:
        raise DigitMismatchError(
            f"Collision count {from_collisions} differs from series value {from_series} "
            f"for N={N}.",
            from_collisions=from_collisions,
            from_series=from_series,
        )

    return DigitCertificate(N=N, value=from_collisions, precision_bits=prec, guard_digits=guard)
