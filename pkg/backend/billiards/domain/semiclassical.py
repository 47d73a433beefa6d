# billiards/domain/semiclassical.py
"""
Adiabatic model: the small ball is a quantum particle in an infinite well
whose moving wall is the classical big ball.

The particle sits in an equal superposition of the levels n and n+1. Its mean
position oscillates at the Bohr frequency while the well width x follows the
big ball out to its retracing point x_min and back.
"""

import math

import numpy as np
from scipy.integrate import quad, solve_ivp

from billiards.domain.value_objects import BilliardParams, CurveSeries, SemiclassicalConfig
from core.exceptions import DomainValidationError

ODE_START_OFFSET = 1e-8


def _require_level(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise DomainValidationError("Quantum number n must be an integer >= 1.")


def _require_width(x: float) -> None:
    if not x > 0:
        raise DomainValidationError(f"Well width must be positive, got {x}.")


def _require_sign(v_sign: int) -> int:
    sign = int(v_sign)
    if sign not in (-1, 0, 1) or sign != v_sign:
        raise DomainValidationError(f"Velocity sign must be -1, 0 or 1, got {v_sign}.")
    return sign


# ==============================
# LEVELS
# ==============================


def energy_level(n: int, x: float, params: BilliardParams) -> float:
    _require_level(n)
    _require_width(x)
    return n**2 * math.pi**2 * params.hbar**2 / (2 * float(params.m) * x**2)


def mean_level_energy(n: int, x: float, params: BilliardParams) -> float:
    """Expected energy of the equal two-level superposition."""
    return 0.5 * (energy_level(n, x, params) + energy_level(n + 1, x, params))


def level_gap_frequency(n: int, x: float, params: BilliardParams) -> float:
    """Bohr frequency (E_{n+1} - E_n)/hbar."""
    return (energy_level(n + 1, x, params) - energy_level(n, x, params)) / params.hbar


def berry_phase(n: int) -> float:
    """
    Geometric phase of level n over a full trip of the wall.

    The eigenfunctions are real, so the connection vanishes identically;
    see berry_connection for the numerical check.
    """
    _require_level(n)
    return 0.0


def berry_connection(n: int, x: float, params: BilliardParams) -> float:
    """<psi_n | d/dx psi_n> by quadrature over the well [0, x]."""
    _require_level(n)
    _require_width(x)
    k = n * math.pi / x
    norm = math.sqrt(2.0 / x)

    def integrand(y: float) -> float:
        psi = norm * math.sin(k * y)
        dpsi_dx = -psi / (2 * x) - norm * math.cos(k * y) * k * y / x
        return psi * dpsi_dx

    value, _ = quad(integrand, 0.0, x, epsabs=1e-11, epsrel=0.0, limit=200)
    return value


# ==============================
# BIG BALL
# ==============================


def _speed_scale_sq(cfg: SemiclassicalConfig) -> float:
    """K**2 in v**2 = K**2 * (1/x_min**2 - 1/x**2)."""
    n, p = cfg.n, cfg.params
    return (2 * n**2 + 2 * n + 1) * math.pi**2 * p.hbar**2 / (2 * float(p.M) * float(p.m))


def _speed_from_inverse(inv_x: float, cfg: SemiclassicalConfig) -> float:
    gap = 1.0 / cfg.x_min**2 - inv_x**2
    return math.sqrt(_speed_scale_sq(cfg) * max(gap, 0.0))


def big_ball_speed(x: float, cfg: SemiclassicalConfig) -> float:
    """
    Speed of the big ball at well width x.

    Half M v**2 is the energy the particle has released since the turning
    point, so the ball stops at x_min and tends to terminal_speed.
    """
    if not x >= cfg.x_min:
        raise DomainValidationError(f"Width {x} lies inside the retracing point {cfg.x_min}.")
    return _speed_from_inverse(1.0 / x, cfg)


def terminal_speed(cfg: SemiclassicalConfig) -> float:
    return _speed_from_inverse(0.0, cfg)


# ==============================
# PHASE
# ==============================


def _phase_rate(n: int, R: float) -> float:
    return math.sqrt((4 * n**2 + 4 * n + 1) / (4 * n**2 + 4 * n + 2)) * math.pi * R


def total_phase_for(n: int, R: float) -> float:
    _require_level(n)
    if R < 0:
        raise DomainValidationError("Mass-ratio root must be non-negative.")
    return _phase_rate(n, R) * math.pi


def total_phase(cfg: SemiclassicalConfig) -> float:
    """Relative phase of the two levels gained over the whole trip; x_min drops out."""
    return total_phase_for(cfg.n, cfg.params.R)


def accumulated_phase(x: float, cfg: SemiclassicalConfig, v_sign: int) -> float:
    """
    Relative phase at width x, counted from the start of the trip.

    v_sign is -1 on the way in, +1 on the way out and 0 at the turning point.
    """
    sign = _require_sign(v_sign)
    if not x >= cfg.x_min:
        raise DomainValidationError(f"Width {x} lies inside the retracing point {cfg.x_min}.")
    angle = math.acos(min(cfg.x_min / x, 1.0))
    return _phase_rate(cfg.n, cfg.params.R) * (math.pi / 2 + sign * angle)


def _leg_phase(inv_ratio: float, cfg: SemiclassicalConfig) -> float:
    """
    Phase gained between x_min and x = x_min / inv_ratio.

    The ODE runs in u = x_min/x so that x = infinity is the finite end u = 0.
    Below u_start the big ball moves as sqrt(g (x - x_min)) and the phase is
    integrated in closed form.
    """
    x_min, p = cfg.x_min, cfg.params
    gap_coefficient = level_gap_frequency(cfg.n, 1.0, p)  # omega(x) * x**2
    curvature = 2 * _speed_scale_sq(cfg) / x_min**3
    omega_min = gap_coefficient / x_min**2
    u_start = 1.0 / (1.0 + ODE_START_OFFSET)

    if inv_ratio >= u_start:
        offset = x_min / inv_ratio - x_min
        return 2 * omega_min * math.sqrt(offset / curvature)

    head = 2 * omega_min * math.sqrt(ODE_START_OFFSET * x_min / curvature)

    def rhs(u, _phase):
        # dphi/du = -(omega/|v|) * dx/du with dx/du = -x_min/u**2
        return [-gap_coefficient / (x_min * _speed_from_inverse(u / x_min, cfg))]

    solution = solve_ivp(
        rhs,
        (u_start, inv_ratio),
        [0.0],
        method="DOP853",
        rtol=1e-11,
        atol=1e-13,
    )
    return head + float(solution.y[0, -1])


def integrated_phase(x: float, cfg: SemiclassicalConfig, v_sign: int) -> float:
    """accumulated_phase by direct integration of the Bohr frequency over dt = dx/v."""
    sign = _require_sign(v_sign)
    if not x >= cfg.x_min:
        raise DomainValidationError(f"Width {x} lies inside the retracing point {cfg.x_min}.")
    full_leg = _leg_phase(0.0, cfg)
    if sign == 0:
        return full_leg
    return full_leg + sign * _leg_phase(cfg.x_min / x, cfg)


# ==============================
# MEAN POSITION
# ==============================


def mean_position(cfg: SemiclassicalConfig, phase: float, x: float) -> float:
    _require_width(x)
    return x / 2 - x * cfg.amplitude * math.cos(phase)


def extremum_count(cfg: SemiclassicalConfig) -> int:
    """Number of extrema of the mean position over the full trip."""
    return math.floor(total_phase(cfg) / math.pi)


def alpha_of(rho: float, rho_min: float, v_sign: int) -> float:
    """Normalized time: -pi/2 long before the turning point, pi/2 long after."""
    sign = _require_sign(v_sign)
    if not rho_min > 0:
        raise DomainValidationError("Minimal radius must be positive.")
    if rho < rho_min:
        raise DomainValidationError(f"Radius {rho} is below its minimum {rho_min}.")
    return sign * math.acos(rho_min / rho)


def sample_curve(cfg: SemiclassicalConfig, grid: int) -> CurveSeries:
    """
    Normalized mean position against alpha on a midpoint grid.

    With rho ~ sqrt(M) x the width at alpha is x_min / cos(alpha).
    """
    if grid < 2:
        raise DomainValidationError("At least two samples are required.")

    alphas = -np.pi / 2 + (np.arange(grid) + 0.5) * np.pi / grid
    points = []
    for alpha in alphas:
        x = cfg.x_min / math.cos(alpha)
        phase = accumulated_phase(x, cfg, int(np.sign(alpha)))
        points.append((float(alpha), mean_position(cfg, phase, x) / x))

    return CurveSeries(
        abscissa="alpha",
        ordinate="y_over_x",
        model="semiclassical",
        label="n",
        label_value=cfg.n,
        points=tuple(points),
        metadata={
            "beta": cfg.params.beta,
            "R": cfg.params.R,
            "x_min": cfg.x_min,
            "amplitude": cfg.amplitude,
            "total_phase": total_phase(cfg),
            "extremum_count": extremum_count(cfg),
        },
    )
