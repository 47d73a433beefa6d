# billiards/domain/quantum.py
"""
Fully quantum model: a free particle in the unbounded wedge 0 <= theta <= beta.

Eigenmodes are J_l(k rho) sin(l theta) with l = n pi / beta. Each splits into
an incident part carried by H1 and an outgoing part carried by H2. The mean
angle of the superposition of channels n and n+1 oscillates with rho in step
with the classical collisions.
"""

import math
from typing import Literal

import numpy as np
from scipy.integrate import quad

from billiards.domain.classical import trajectory_invariants
from billiards.domain.geometry import to_polar
from billiards.domain.special import cylinder_value, cylinder_values
from billiards.domain.value_objects import CollisionTrace, CurveSeries, QuantumMode
from core.exceptions import DomainValidationError

Wave = Literal["incident", "outgoing"]

COEFFICIENT_CHOICE = "8n(n+1)/(2n+1)^2"


def _require_channel(n: int, beta: float) -> None:
    # QuantumMode carries the validation for n, beta and k
    QuantumMode(k=1.0, n=n, beta=beta)


def phase_shift(n: int, beta: float) -> float:
    """Phase between the incident and outgoing waves of channel n; independent of k."""
    _require_channel(n, beta)
    return (n * math.pi / beta + 0.5) * math.pi


def phase_shift_difference(beta: float) -> float:
    _require_channel(1, beta)
    return math.pi**2 / beta


def amplitude_coefficient(n: int, printed: bool = False) -> float:
    """
    Weight of the cross term in the mean angle.

    printed=True gives the 8n(n+1)/(2n**2+1)**2 variant, which agrees with
    the quadrature only at n = 1.
    """
    if printed:
        return 8 * n * (n + 1) / (2 * n**2 + 1) ** 2
    return 8 * n * (n + 1) / (2 * n + 1) ** 2


def relative_phase(beta: float) -> float:
    """c in the weight exp(i c pi) of the upper channel."""
    return math.pi / (2 * beta)


def _hankel(value, wave: Wave) -> complex:
    return value.hankel1 if wave == "incident" else value.hankel2


def _closed_form(h_l: complex, h_lp: complex, mode: QuantumMode, printed: bool) -> float:
    weight = np.exp(1j * relative_phase(mode.beta) * math.pi)
    cross = 2 * (weight * h_l.conjugate() * h_lp).real
    norm = abs(h_l) ** 2 + abs(h_lp) ** 2
    coefficient = amplitude_coefficient(mode.n, printed=printed)
    return mode.beta / 2 - mode.beta / math.pi**2 * coefficient * cross / norm


def theta_mean(
    rho: float, n: int, beta: float, k: float = 1.0, *, printed: bool = False
) -> float:
    """Mean angle of the incident wave at radius rho, in closed form."""
    if not rho > 0:
        raise DomainValidationError("Radius must be positive.")
    mode = QuantumMode(k=k, n=n, beta=beta)
    h_l = cylinder_value(mode.l, k * rho).hankel1
    h_lp = cylinder_value(mode.adjacent().l, k * rho).hankel1
    return _closed_form(h_l, h_lp, mode, printed)


def theta_mean_quadrature(
    rho: float, n: int, beta: float, k: float = 1.0, wave: Wave = "incident"
) -> float:
    """Mean angle by direct quadrature of the angular density; covers both waves."""
    if wave not in ("incident", "outgoing"):
        raise DomainValidationError(f"Unknown wave {wave!r}.")
    if not rho > 0:
        raise DomainValidationError("Radius must be positive.")
    mode = QuantumMode(k=k, n=n, beta=beta)
    upper = mode.adjacent()
    h_l = _hankel(cylinder_value(mode.l, k * rho), wave)
    h_lp = _hankel(cylinder_value(upper.l, k * rho), wave)
    weight = np.exp(1j * relative_phase(beta) * math.pi)

    def density(theta: float) -> float:
        psi = h_l * math.sin(mode.l * theta) + weight * h_lp * math.sin(upper.l * theta)
        return abs(psi) ** 2

    options = {"epsabs": 0.0, "epsrel": 1e-13, "limit": 200}
    moment, _ = quad(lambda theta: theta * density(theta), 0.0, beta, **options)
    mass, _ = quad(density, 0.0, beta, **options)
    return moment / mass


def eta_of(rho: float, l: float, k: float = 1.0) -> float:
    """Angle whose secant is k rho / l; zero at the quantum turning radius."""
    if not k * rho >= l:
        raise DomainValidationError(f"k*rho={k * rho} lies inside the turning radius l={l}.")
    return math.acos(l / (k * rho))


def _midpoints(low: float, high: float, grid: int) -> np.ndarray:
    if grid < 2:
        raise DomainValidationError("At least two samples are required.")
    return low + (np.arange(grid) + 0.5) * (high - low) / grid


def _curve_metadata(mode: QuantumMode) -> dict:
    return {
        "beta": mode.beta,
        "n": mode.n,
        "k": mode.k,
        "l_prime": mode.adjacent().l,
        "coefficient": COEFFICIENT_CHOICE,
        "relative_phase_c": relative_phase(mode.beta),
    }


def sample_quantum_curve(n: int, beta: float, k: float = 1.0, grid: int = 1000) -> CurveSeries:
    """Normalized mean angle of the incident wave against eta in (0, pi/2)."""
    mode = QuantumMode(k=k, n=n, beta=beta)
    etas = _midpoints(0.0, math.pi / 2, grid)
    arguments = mode.l / np.cos(etas)  # k * rho

    lower = cylinder_values(mode.l, arguments)
    upper = cylinder_values(mode.adjacent().l, arguments)
    points = tuple(
        (float(eta), _closed_form(a.hankel1, b.hankel1, mode, printed=False) / beta)
        for eta, a, b in zip(etas, lower, upper)
    )
    return CurveSeries(
        abscissa="eta",
        ordinate="theta_over_beta",
        model="quantum",
        label="l",
        label_value=mode.l,
        points=points,
        metadata={**_curve_metadata(mode), "wave": "incident"},
    )


def sample_quantum_trip(n: int, beta: float, k: float = 1.0, grid: int = 1000) -> CurveSeries:
    """
    Normalized mean angle over the whole scattering event.

    Signed eta: the incident wave for eta < 0 and the outgoing wave for
    eta > 0, both at rho = l / (k cos eta).
    """
    mode = QuantumMode(k=k, n=n, beta=beta)
    points = []
    for eta in _midpoints(-math.pi / 2, math.pi / 2, grid):
        rho = mode.l / (k * math.cos(eta))
        wave: Wave = "incident" if eta < 0 else "outgoing"
        points.append((float(eta), theta_mean_quadrature(rho, n, beta, k, wave=wave) / beta))
    return CurveSeries(
        abscissa="eta",
        ordinate="theta_over_beta",
        model="quantum",
        label="l",
        label_value=mode.l,
        points=tuple(points),
        metadata={**_curve_metadata(mode), "wave": "trip"},
    )


def classical_theta_curve(trace: CollisionTrace, samples: int = 1000) -> CurveSeries:
    """
    Classical theta/beta against eta on the incoming leg.

    rho_min takes the place of l/k, so rho = rho_min / cos(eta) and eta runs
    from the turning point back toward the far past.
    """
    t_star, rho_min, speed = trajectory_invariants(trace)
    params = trace.params
    beta = params.beta

    points = []
    for eta in _midpoints(0.0, math.pi / 2, samples):
        state = trace.state_at(t_star - rho_min * math.tan(eta) / speed)
        y = min(max(state.y, 0.0), state.x)
        points.append((float(eta), to_polar(state.x, y, params).theta / beta))

    return CurveSeries(
        abscissa="eta",
        ordinate="theta_over_beta",
        model="classical",
        label="l",
        label_value=None,
        points=tuple(points),
        metadata={"beta": beta, "collisions": trace.count, "rho_min": rho_min},
    )
