# billiards/domain/value_objects.py
import enum
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Real
from typing import Any, Optional

import numpy as np

from billiards.domain.geometry import beta_of_ratio
from core.exceptions import DomainValidationError


def _require_positive(name: str, value) -> None:
    if not isinstance(value, Real) or not value > 0:
        raise DomainValidationError(f"{name} must be a positive finite number.")
    # exact ints and Fractions are finite and may exceed the float range
    if not isinstance(value, (int, Fraction)) and not math.isfinite(value):
        raise DomainValidationError(f"{name} must be a positive finite number.")


@dataclass(frozen=True)
class BilliardParams:
    """
    Masses of the two balls and the unit of action.

    M and m may be ints, floats or Fractions; the event-driven simulation uses
    them exactly.
    """

    M: Real = 1
    m: Real = 1
    hbar: float = 1.0

    def __post_init__(self):
        _require_positive("M", self.M)
        _require_positive("m", self.m)
        _require_positive("hbar", self.hbar)

    @classmethod
    def from_mass_ratio(cls, ratio: Real, *, hbar: float = 1.0) -> "BilliardParams":
        return cls(M=ratio, m=1, hbar=hbar)

    @classmethod
    def from_beta(cls, beta: float, *, hbar: float = 1.0) -> "BilliardParams":
        if not 0 < beta <= math.pi / 2:
            raise DomainValidationError("Wedge angle must lie in (0, pi/2].")
        return cls(M=1.0 / math.tan(beta) ** 2, m=1, hbar=hbar)

    @classmethod
    def from_digits(cls, N: int, *, hbar: float = 1.0) -> "BilliardParams":
        """M/m = 100**N, the ratio whose collision count spells N+1 digits of pi."""
        if N < 0:
            raise DomainValidationError("N must be non-negative.")
        return cls(M=100**N, m=1, hbar=hbar)

    @classmethod
    def from_json(cls, payload: str | dict) -> "BilliardParams":
        data = json.loads(payload) if isinstance(payload, str) else payload
        if not isinstance(data, dict):
            raise DomainValidationError("Parameters must be a JSON object.")
        data = dict(data)
        unknown = set(data) - {"M", "m", "hbar"}
        if unknown:
            raise DomainValidationError(f"Unknown parameter keys: {sorted(unknown)}.")
        hbar = data.get("hbar", 1.0)
        _require_positive("hbar", hbar)
        return cls(M=data.get("M", 1), m=data.get("m", 1), hbar=float(hbar))

    @property
    def exact_ratio(self) -> Fraction:
        return Fraction(self.M) / Fraction(self.m)

    @property
    def ratio(self) -> float:
        return float(self.exact_ratio)

    @property
    def R(self) -> float:
        return math.sqrt(self.ratio)

    @property
    def beta(self) -> float:
        return beta_of_ratio(self.R)

    def to_dict(self) -> dict:
        return {"M": float(self.M), "m": float(self.m), "hbar": float(self.hbar)}


class CollisionKind(str, enum.Enum):
    BALL_BALL = "BallBall"
    BALL_WALL = "BallWall"


@dataclass(frozen=True)
class ClassicalState:
    t: float
    x: float
    y: float
    vx: float
    vy: float

    def kinetic_energy(self, params: BilliardParams) -> float:
        return 0.5 * float(params.M) * self.vx**2 + 0.5 * float(params.m) * self.vy**2

    def advanced(self, dt: float) -> "ClassicalState":
        return ClassicalState(
            t=self.t + dt,
            x=self.x + self.vx * dt,
            y=self.y + self.vy * dt,
            vx=self.vx,
            vy=self.vy,
        )


@dataclass(frozen=True)
class CollisionEvent:
    index: int
    kind: CollisionKind
    t: float
    state_after: ClassicalState


@dataclass(frozen=True)
class CollisionTrace:
    params: BilliardParams
    initial: ClassicalState
    events: tuple[CollisionEvent, ...]
    mode: str

    @property
    def count(self) -> int:
        return len(self.events)

    @property
    def final(self) -> ClassicalState:
        return self.events[-1].state_after if self.events else self.initial

    def state_at(self, t: float) -> ClassicalState:
        """
        Position and velocity at time t on the piecewise-linear trajectory.

        Times before the initial state follow the incoming straight line.
        """
        current = self.initial
        for event in self.events:
            if event.t > t:
                break
            current = event.state_after
        return current.advanced(t - current.t)


@dataclass(frozen=True)
class SemiclassicalConfig:
    n: int
    params: BilliardParams
    x_min: float

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainValidationError("Quantum number n must be an integer >= 1.")
        _require_positive("x_min", self.x_min)

    @property
    def amplitude(self) -> float:
        """Coefficient of cos(phase) in the mean position, in (0, 1/2)."""
        n = self.n
        return 8 * n * (n + 1) / (math.pi**2 * (2 * n + 1) ** 2)


@dataclass(frozen=True)
class QuantumMode:
    k: float
    n: int
    beta: float

    def __post_init__(self):
        _require_positive("k", self.k)
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainValidationError("Channel index n must be an integer >= 1.")
        if not 0 < self.beta <= math.pi / 2:
            raise DomainValidationError("Wedge angle must lie in (0, pi/2].")

    @property
    def l(self) -> float:
        return self.n * math.pi / self.beta

    def adjacent(self) -> "QuantumMode":
        return QuantumMode(k=self.k, n=self.n + 1, beta=self.beta)


@dataclass(frozen=True)
class CylinderValue:
    """J, Y and their derivatives at one (order, argument) with a certified bound."""

    nu: float
    x: float
    j: float
    y: float
    jp: float
    yp: float
    error_bound: float

    @property
    def hankel1(self) -> complex:
        return complex(self.j, self.y)

    @property
    def hankel2(self) -> complex:
        return complex(self.j, -self.y)

    @property
    def wronskian_residual(self) -> float:
        w = self.j * self.yp - self.jp * self.y
        return abs(w - 2.0 / (math.pi * self.x)) * math.pi * self.x / 2.0


@dataclass(frozen=True)
class CurveSeries:
    """Ordered (abscissa, ordinate) samples plus the metadata of their model."""

    abscissa: str
    ordinate: str
    model: str
    label: str
    label_value: Optional[float]
    points: tuple[tuple[float, float], ...]
    metadata: dict[str, Any] = field(default_factory=dict)

    @property
    def header(self) -> tuple[str, str, str, str]:
        return (self.abscissa, self.ordinate, "model", self.label)

    @property
    def xs(self) -> np.ndarray:
        return np.array([p[0] for p in self.points], dtype=float)

    @property
    def ys(self) -> np.ndarray:
        return np.array([p[1] for p in self.points], dtype=float)

    def extremum_abscissae(self, tol: float = 1e-12) -> list[float]:
        """
        Abscissae of the interior extrema of the sampled ordinate.

        Steps smaller than tol are treated as flat and do not split a run.
        """
        xs, ys = self.xs, self.ys
        steps = np.diff(ys)
        found: list[float] = []
        last_sign = 0
        for i, step in enumerate(steps):
            if abs(step) <= tol:
                continue
            sign = 1 if step > 0 else -1
            if last_sign and sign != last_sign:
                found.append(float(xs[i]))
            last_sign = sign
        return found

    def extremum_count(self, tol: float = 1e-12) -> int:
        return len(self.extremum_abscissae(tol))

    def to_dict(self) -> dict:
        return {
            "abscissa": self.abscissa,
            "ordinate": self.ordinate,
            "model": self.model,
            "label": self.label,
            "label_value": self.label_value,
            "points": [list(p) for p in self.points],
            "metadata": self.metadata,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CurveSeries":
        return cls(
            abscissa=data["abscissa"],
            ordinate=data["ordinate"],
            model=data["model"],
            label=data["label"],
            label_value=data["label_value"],
            points=tuple((float(a), float(o)) for a, o in data["points"]),
            metadata=dict(data.get("metadata", {})),
        )
