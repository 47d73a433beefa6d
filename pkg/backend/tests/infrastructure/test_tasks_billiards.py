# backend/tests/infrastructure/test_tasks_billiards.py
import pytest

from billiards.domain.value_objects import BilliardParams, CurveSeries
from core.exceptions import DomainValidationError
from infrastructure.billiards.tasks import sample_curve_task


def _request(**extra) -> dict:
    request = {"params": BilliardParams.from_mass_ratio(100).to_dict(), "samples": 25}
    request.update(extra)
    return request


def test_sample_curve_task_returns_plain_curve():
    data = sample_curve_task("semiclassical", _request(n=1))

    series = CurveSeries.from_dict(data)
    assert series.model == "semiclassical"
    assert len(series.points) == 25
    assert series.metadata["extremum_count"] == 29


def test_sample_curve_task_runs_through_celery():
    result = sample_curve_task.delay("classical", _request(incidence="standard"))
    data = result.get()
    assert data["metadata"]["collisions"] == 31


def test_sample_curve_task_reraises_domain_errors():
    with pytest.raises(DomainValidationError):
        sample_curve_task("spectral", _request())
