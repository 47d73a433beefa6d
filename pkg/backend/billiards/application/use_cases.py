# billiards/application/use_cases.py
import json
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from celery import group
from django.conf import settings

from billiards import __version__
from billiards.application.curves import INCIDENCES, build_curve, incidence_speed
from billiards.domain.classical import (
    collision_digits,
    count_closed_form,
    pi_digits,
    simulate,
)
from billiards.domain.quantum import (
    COEFFICIENT_CHOICE,
    phase_shift,
    phase_shift_difference,
)
from billiards.domain.value_objects import BilliardParams, CurveSeries
from core.exceptions import DomainValidationError
from infrastructure.billiards.cache import cache_certificate, get_cached_certificate
from infrastructure.billiards.tasks import sample_curve_task
from infrastructure.billiards.writers import (
    format_number,
    render_curve,
    write_curve,
    write_manifest,
    write_trace,
)

logger = logging.getLogger(__name__)

SUBCOMMANDS = (
    "digits",
    "count",
    "simulate",
    "semiclassical",
    "quantum",
    "phaseshift",
    "figures",
)
OUTPUT_FORMATS = ("csv", "json")
GEOMETRY_OPTIONS = ("--beta", "--mass-ratio", "--N", "--params")

FIGURE_BETA = math.pi / 10
MANIFEST_NAME = "manifest.json"


@dataclass(frozen=True)
class RunConfig:
    """
    One CLI invocation, already parsed.

    Geometry is given by exactly one of beta, mass_ratio, N and params_json;
    figures falls back to beta = pi/10 when none is given.
    """

    subcommand: str
    beta: Optional[float] = None
    mass_ratio: Optional[str] = None
    N: Optional[int] = None
    params_json: Optional[str] = None
    n: Optional[int] = None
    k: float = 1.0
    x_min: float = 1.0
    samples: int = 1000
    v0: float = 1.0
    x0: float = 10.0
    y0: float = 1.0
    incidence: str = "standard"
    trip: bool = False
    out: Optional[Path] = None
    trace_out: Optional[Path] = None
    output_format: str = "csv"
    significant_digits: Optional[int] = None
    manifest: Optional[Path] = None

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise DomainValidationError(f"Unknown subcommand {self.subcommand!r}.")
        if self.output_format not in OUTPUT_FORMATS:
            raise DomainValidationError(f"Unknown output format {self.output_format!r}.")
        if self.incidence not in INCIDENCES:
            raise DomainValidationError(f"Unknown incidence {self.incidence!r}.")
        if self.samples < 2:
            raise DomainValidationError("At least two samples are required.")
        if self.significant_digits is not None and not 1 <= self.significant_digits <= 17:
            raise DomainValidationError("Significant digits must lie in [1, 17].")

    @property
    def geometry_given(self) -> list[str]:
        values = (self.beta, self.mass_ratio, self.N, self.params_json)
        return [name for name, value in zip(GEOMETRY_OPTIONS, values) if value is not None]

    @property
    def digits(self) -> int:
        if self.significant_digits is not None:
            return self.significant_digits
        return settings.PI_BILLIARDS_SIGNIFICANT_DIGITS


@dataclass
class RunOutcome:
    lines: list[str] = field(default_factory=list)
    artifacts: list[Path] = field(default_factory=list)


# ==============================
# HELPERS
# ==============================


def _parse_ratio(raw: str) -> Fraction:
    try:
        return Fraction(str(raw).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainValidationError(f"Invalid mass ratio {raw!r}.") from exc


def _load_params_json(raw: str) -> BilliardParams:
    path = Path(raw)
    text = path.read_text() if path.suffix == ".json" and path.is_file() else raw
    try:
        return BilliardParams.from_json(text)
    except json.JSONDecodeError as exc:
        raise DomainValidationError(f"Invalid parameter JSON: {exc.msg}.") from exc


def resolve_geometry(
    config: RunConfig, *, default_beta: Optional[float] = None
) -> BilliardParams:
    """Turn the single geometry option of a run into BilliardParams."""
    given = config.geometry_given
    if not given and default_beta is not None:
        return BilliardParams.from_beta(default_beta)
    if len(given) != 1:
        raise DomainValidationError(
            f"Exactly one of {', '.join(GEOMETRY_OPTIONS)} is required (got {len(given)})."
        )

    if config.beta is not None:
        return BilliardParams.from_beta(config.beta)
    if config.mass_ratio is not None:
        return BilliardParams.from_mass_ratio(_parse_ratio(config.mass_ratio))
    if config.N is not None:
        return BilliardParams.from_digits(config.N)
    return _load_params_json(config.params_json)


def _require_level(config: RunConfig) -> int:
    if config.n is None:
        raise DomainValidationError(f"{config.subcommand} needs --n.")
    return config.n


def _curve_request(config: RunConfig, params: BilliardParams, **extra) -> dict:
    request = {
        "params": params.to_dict(),
        "samples": config.samples,
        "x_min": config.x_min,
        "k": config.k,
        "v0": config.v0,
        "x0": config.x0,
        "y0": config.y0,
        "incidence": config.incidence,
    }
    request.update(extra)
    return request


def _manifest_payload(
    config: RunConfig, params: Optional[BilliardParams], **extra
) -> dict:
    payload = {
        "tool": "pi-billiards",
        "version": __version__,
        "subcommand": config.subcommand,
        "params": params.to_dict() if params is not None else None,
        "beta": params.beta if params is not None else None,
        "coefficient": COEFFICIENT_CHOICE,
        "significant_digits": config.digits,
        "format": config.output_format,
    }
    payload.update(extra)
    return payload


def _finish(config: RunConfig, outcome: RunOutcome, manifest: dict) -> RunOutcome:
    """Write the manifest next to the artifacts, or where --manifest points."""
    target = config.manifest
    if target is None and outcome.artifacts:
        target = outcome.artifacts[0].parent / MANIFEST_NAME
    if target is not None:
        manifest["artifacts"] = [p.name for p in outcome.artifacts]
        outcome.artifacts.append(write_manifest(manifest, target))
    return outcome


def _emit_curve(config: RunConfig, series: CurveSeries, outcome: RunOutcome) -> None:
    if config.out is None:
        outcome.lines.extend(render_curve(series, config.output_format, config.digits))
        return
    path = write_curve(series, config.out, config.output_format, config.digits)
    outcome.artifacts.append(path)
    outcome.lines.append(f"wrote {path}")


# ==============================
# USE CASES
# ==============================


class DigitsUseCase:
    """
    floor(pi * 10**N) with both certificates.

    Responsibilities:
    - Serve a cached certificate when present
    - Otherwise run both extractions under the configured precision ceiling
    - Cache the agreed result
    """

    @staticmethod
    def execute(*, config: RunConfig) -> RunOutcome:
        if config.N is None:
            raise DomainValidationError("digits needs --N.")

        certificate = get_cached_certificate(config.N)
        if certificate is None:
            certificate = pi_digits(config.N, max_prec=settings.PI_BILLIARDS_PRECISION_BITS)
            cache_certificate(certificate)
            logger.info(
                "Digits certified: N=%s, precision_bits=%s, guard_digits=%s",
                certificate.N,
                certificate.precision_bits,
                certificate.guard_digits,
            )
        else:
            logger.info("Digits served from cache: N=%s", config.N)

        outcome = RunOutcome(
            lines=[
                str(certificate.value),
                f"precision_bits={certificate.precision_bits} "
                f"guard_digits={certificate.guard_digits}",
            ]
        )
        return _finish(
            config,
            outcome,
            _manifest_payload(
                config,
                None,
                N=certificate.N,
                value=str(certificate.value),
                precision_bits=certificate.precision_bits,
                guard_digits=certificate.guard_digits,
            ),
        )


class CountUseCase:
    """
    Closed-form collision count.

    --N goes through the certified interval path; floats cannot resolve
    pi/beta for large N.
    """

    @staticmethod
    def execute(*, config: RunConfig) -> RunOutcome:
        if config.geometry_given == ["--N"]:
            # 100**N overflows a float long before the interval path gives up
            if config.N < 0:
                raise DomainValidationError("N must be non-negative.")
            count, prec = collision_digits(
                config.N, max_prec=settings.PI_BILLIARDS_PRECISION_BITS
            )
            logger.info(
                "Count certified: N=%s, count=%s, precision_bits=%s", config.N, count, prec
            )
            manifest = _manifest_payload(config, None, N=config.N, precision_bits=prec)
        else:
            params = resolve_geometry(config)
            count = count_closed_form(params.beta)
            logger.info("Count: beta=%s, count=%s", params.beta, count)
            manifest = _manifest_payload(config, params)
        return _finish(config, RunOutcome(lines=[str(count)]), manifest)


class SimulateUseCase:
    """
    Event-driven run of the billiard.

    Responsibilities:
    - Resolve geometry and incidence
    - Write the event trace and/or the sampled curve when asked
    - Print the collision count and arithmetic mode
    """

    @staticmethod
    def execute(*, config: RunConfig) -> RunOutcome:
        params = resolve_geometry(config)
        u0 = incidence_speed(params, config.incidence, config.v0)
        trace = simulate(params, v0=config.v0, x0=config.x0, y0=config.y0, u0=u0)
        logger.info(
            "Simulation finished: ratio=%s, mode=%s, collisions=%s",
            params.ratio,
            trace.mode,
            trace.count,
        )

        outcome = RunOutcome(lines=[f"collisions={trace.count}", f"mode={trace.mode}"])
        if config.trace_out is not None:
            path = write_trace(trace, config.trace_out, config.digits)
            outcome.artifacts.append(path)
            outcome.lines.append(f"wrote {path}")
        if config.out is not None:
            series = build_curve("classical", _curve_request(config, params))
            _emit_curve(config, series, outcome)

        return _finish(
            config,
            outcome,
            _manifest_payload(
                config,
                params,
                collisions=trace.count,
                mode=trace.mode,
                incidence=config.incidence,
                u0=u0,
            ),
        )


class SemiclassicalUseCase:
    @staticmethod
    def execute(*, config: RunConfig) -> RunOutcome:
        params = resolve_geometry(config)
        n = _require_level(config)
        series = build_curve("semiclassical", _curve_request(config, params, n=n))
        logger.info(
            "Semiclassical curve sampled: n=%s, samples=%s, extremum_count=%s",
            n,
            config.samples,
            series.metadata["extremum_count"],
        )

        outcome = RunOutcome()
        _emit_curve(config, series, outcome)
        return _finish(config, outcome, _manifest_payload(config, params, curve=series.metadata))


class QuantumUseCase:
    @staticmethod
    def execute(*, config: RunConfig) -> RunOutcome:
        params = resolve_geometry(config)
        n = _require_level(config)
        kind = "quantum_trip" if config.trip else "quantum"
        series = build_curve(kind, _curve_request(config, params, n=n))
        logger.info(
            "Quantum curve sampled: kind=%s, l=%s, samples=%s",
            kind,
            series.label_value,
            config.samples,
        )

        outcome = RunOutcome()
        _emit_curve(config, series, outcome)
        return _finish(config, outcome, _manifest_payload(config, params, curve=series.metadata))


class PhaseShiftUseCase:
    @staticmethod
    def execute(*, config: RunConfig) -> RunOutcome:
        params = resolve_geometry(config)
        n = _require_level(config)
        delta = phase_shift(n, params.beta)
        difference = phase_shift_difference(params.beta)
        digits = config.digits

        outcome = RunOutcome(
            lines=[
                f"delta={format_number(delta, digits)} "
                f"({format_number(delta / math.pi, digits)} pi)",
                f"delta_difference={format_number(difference, digits)} "
                f"({format_number(difference / math.pi, digits)} pi)",
            ]
        )
        return _finish(
            config,
            outcome,
            _manifest_payload(config, params, n=n, delta=delta, delta_difference=difference),
        )


class FiguresUseCase:
    """
    Reproduce the comparison figures into one directory.

    Responsibilities:
    - Build one curve request per figure file
    - Dispatch them as a Celery group (in-process when eager)
    - Write every curve plus the manifest in a fixed order
    """

    @staticmethod
    def figure_requests(
        config: RunConfig, params: BilliardParams
    ) -> dict[str, tuple[str, dict]]:
        # Classical references use bisector incidence
        classical = _curve_request(config, params, incidence="bisector")
        return {
            "fig3_classical": ("classical", classical),
            "fig3_n1": ("semiclassical", _curve_request(config, params, n=1)),
            "fig3_n10": ("semiclassical", _curve_request(config, params, n=10)),
            "fig5_classical": ("classical_theta", classical),
            "fig5_l10": ("quantum", _curve_request(config, params, n=1)),
            "fig5_l100": ("quantum", _curve_request(config, params, n=10)),
        }

    @staticmethod
    def execute(*, config: RunConfig) -> RunOutcome:
        if config.out is None:
            raise DomainValidationError("figures needs --out DIR.")
        params = resolve_geometry(config, default_beta=FIGURE_BETA)
        requests = FiguresUseCase.figure_requests(config, params)

        job = group(sample_curve_task.s(kind, request) for kind, request in requests.values())
        results = job.apply_async().get()
        logger.info("Figure curves sampled: count=%s, beta=%s", len(results), params.beta)

        directory = Path(config.out)
        outcome = RunOutcome()
        metadata = {}
        for name, data in zip(requests, results):
            series = CurveSeries.from_dict(data)
            suffix = "json" if config.output_format == "json" else "csv"
            path = write_curve(
                series, directory / f"{name}.{suffix}", config.output_format, config.digits
            )
            outcome.artifacts.append(path)
            outcome.lines.append(f"wrote {path}")
            metadata[name] = series.metadata

        manifest = _manifest_payload(config, params, figures=metadata)
        target = config.manifest or directory / MANIFEST_NAME
        manifest["artifacts"] = [p.name for p in outcome.artifacts]
        outcome.artifacts.append(write_manifest(manifest, target))
        return outcome


USE_CASES = {
    "digits": DigitsUseCase,
    "count": CountUseCase,
    "simulate": SimulateUseCase,
    "semiclassical": SemiclassicalUseCase,
    "quantum": QuantumUseCase,
    "phaseshift": PhaseShiftUseCase,
    "figures": FiguresUseCase,
}


def run(config: RunConfig) -> RunOutcome:
    """Execute one run; identical configs give identical lines and files."""
    logger.info("Run started: subcommand=%s", config.subcommand)
    return USE_CASES[config.subcommand].execute(config=config)
