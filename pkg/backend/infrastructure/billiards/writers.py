# backend/infrastructure/billiards/writers.py
import csv
import io
import json
import logging
from pathlib import Path
from typing import Optional

from django.core.serializers.json import DjangoJSONEncoder

from billiards.domain.value_objects import CollisionTrace, CurveSeries

logger = logging.getLogger(__name__)

TRACE_HEADER = ("index", "kind", "t", "x", "y", "vx", "vy")


def format_number(value: Optional[float], digits: int) -> str:
    """Shortest-form rendering with the requested significant digits; None is blank."""
    if value is None:
        return ""
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    return format(float(value), f".{digits}g")


def _round(value: float, digits: int) -> float:
    return float(format_number(value, digits))


def _dump_json(payload: dict) -> str:
    return json.dumps(payload, cls=DjangoJSONEncoder, sort_keys=True, indent=2) + "\n"


def _csv_text(header, rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def curve_text(series: CurveSeries, output_format: str, digits: int) -> str:
    if output_format == "json":
        payload = series.to_dict()
        payload["points"] = [[_round(a, digits), _round(o, digits)] for a, o in series.points]
        return _dump_json(payload)

    label = format_number(series.label_value, digits)
    rows = (
        (format_number(a, digits), format_number(o, digits), series.model, label)
        for a, o in series.points
    )
    return _csv_text(series.header, rows)


def render_curve(series: CurveSeries, output_format: str, digits: int) -> list[str]:
    """Curve as output lines, for runs without --out."""
    return curve_text(series, output_format, digits).splitlines()


def _write(path: Path, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    logger.info("Artifact written: path=%s, bytes=%s", path, len(text))
    return path


def write_curve(series: CurveSeries, path: Path, output_format: str, digits: int) -> Path:
    return _write(path, curve_text(series, output_format, digits))


def write_trace(trace: CollisionTrace, path: Path, digits: int) -> Path:
    """One row per collision event, state after the event."""
    rows = (
        (
            event.index,
            event.kind.value,
            *(
                format_number(v, digits)
                for v in (
                    event.t,
                    event.state_after.x,
                    event.state_after.y,
                    event.state_after.vx,
                    event.state_after.vy,
                )
            ),
        )
        for event in trace.events
    )
    return _write(path, _csv_text(TRACE_HEADER, rows))


def write_manifest(payload: dict, path: Path) -> Path:
    return _write(path, _dump_json(payload))
