# billiards/application/curves.py
"""
Curve builders addressed by name, so that a curve request can travel as
plain JSON (Celery payloads, manifests) and be rebuilt anywhere.
"""

from typing import Any, Callable

from billiards.domain.classical import bisector_speed, classical_curve, simulate
from billiards.domain.quantum import (
    classical_theta_curve,
    sample_quantum_curve,
    sample_quantum_trip,
)
from billiards.domain.semiclassical import sample_curve
from billiards.domain.value_objects import BilliardParams, CurveSeries, SemiclassicalConfig
from core.exceptions import DomainValidationError

INCIDENCES = ("standard", "bisector")


def incidence_speed(params: BilliardParams, incidence: str, v0: float) -> float:
    if incidence not in INCIDENCES:
        raise DomainValidationError(f"Unknown incidence {incidence!r}.")
    return bisector_speed(params, v0) if incidence == "bisector" else 0.0


def _classical(params: BilliardParams, request: dict) -> CurveSeries:
    v0 = request.get("v0", 1.0)
    return classical_curve(
        params,
        v0=v0,
        x0=request.get("x0", 10.0),
        y0=request.get("y0", 1.0),
        samples=request["samples"],
        u0=incidence_speed(params, request.get("incidence", "standard"), v0),
    )


def _classical_theta(params: BilliardParams, request: dict) -> CurveSeries:
    v0 = request.get("v0", 1.0)
    trace = simulate(
        params,
        v0=v0,
        x0=request.get("x0", 10.0),
        y0=request.get("y0", 1.0),
        u0=incidence_speed(params, request.get("incidence", "standard"), v0),
    )
    return classical_theta_curve(trace, samples=request["samples"])


def _semiclassical(params: BilliardParams, request: dict) -> CurveSeries:
    cfg = SemiclassicalConfig(n=request["n"], params=params, x_min=request.get("x_min", 1.0))
    return sample_curve(cfg, request["samples"])


def _quantum(params: BilliardParams, request: dict) -> CurveSeries:
    return sample_quantum_curve(
        request["n"], params.beta, k=request.get("k", 1.0), grid=request["samples"]
    )


def _quantum_trip(params: BilliardParams, request: dict) -> CurveSeries:
    return sample_quantum_trip(
        request["n"], params.beta, k=request.get("k", 1.0), grid=request["samples"]
    )


CURVE_BUILDERS: dict[str, Callable[[BilliardParams, dict], CurveSeries]] = {
    "classical": _classical,
    "classical_theta": _classical_theta,
    "semiclassical": _semiclassical,
    "quantum": _quantum,
    "quantum_trip": _quantum_trip,
}


def build_curve(kind: str, request: dict[str, Any]) -> CurveSeries:
    """
    Build one curve from a JSON-compatible request.

    request carries "params" (the BilliardParams JSON schema), "samples" and
    whatever the model needs ("n", "x_min", "k", "incidence", "v0", "x0", "y0").
    """
    builder = CURVE_BUILDERS.get(kind)
    if builder is None:
        raise DomainValidationError(f"Unknown curve kind {kind!r}.")
    params = BilliardParams.from_json(request["params"])
    return builder(params, request)
