# backend/tests/billiards/test_value_objects_billiards.py
import json
import math
from fractions import Fraction

import numpy as np
import pytest

from billiards.domain.value_objects import (
    BilliardParams,
    CurveSeries,
    CylinderValue,
    QuantumMode,
    SemiclassicalConfig,
)
from core.exceptions import DomainValidationError


class TestBilliardParamsVO:
    def test_defaults(self):
        p = BilliardParams()
        assert (p.M, p.m, p.hbar) == (1, 1, 1.0)
        assert p.R == 1.0
        assert p.beta == pytest.approx(math.pi / 4)

    def test_from_mass_ratio(self):
        p = BilliardParams.from_mass_ratio(100)
        assert p.R == pytest.approx(10.0)
        assert p.exact_ratio == 100

    def test_from_beta_inverts_beta(self):
        p = BilliardParams.from_beta(math.pi / 10)
        assert p.beta == pytest.approx(math.pi / 10, rel=1e-13)
        assert p.m == 1

    def test_from_beta_outside_range_raises(self):
        with pytest.raises(DomainValidationError):
            BilliardParams.from_beta(0.0)
        with pytest.raises(DomainValidationError):
            BilliardParams.from_beta(2.0)

    def test_from_digits_is_exact(self):
        p = BilliardParams.from_digits(200)
        assert p.exact_ratio == Fraction(100**200)
        assert BilliardParams.from_digits(2).exact_ratio == 10_000

    def test_from_json_with_defaults(self):
        p = BilliardParams.from_json('{"M": 4}')
        assert (p.M, p.m, p.hbar) == (4, 1, 1.0)
        assert BilliardParams.from_json({"M": 9, "m": 1, "hbar": 2}).hbar == 2.0

    @pytest.mark.parametrize(
        "payload",
        ['{"hbar": "x"}', '{"hbar": null}', '{"hbar": -1}', '{"M": "x"}', '{"M": null}', "[1, 2]"],
    )
    def test_from_json_malformed_values_raise(self, payload):
        with pytest.raises(DomainValidationError):
            BilliardParams.from_json(payload)

    def test_from_json_unknown_key_raises(self):
        with pytest.raises(DomainValidationError):
            BilliardParams.from_json(json.dumps({"M": 1, "mass": 2}))

    @pytest.mark.parametrize("bad", [0, -1, float("nan"), float("inf"), "3"])
    def test_non_positive_or_non_finite_masses_raise(self, bad):
        with pytest.raises(DomainValidationError):
            BilliardParams(M=bad, m=1)

    def test_to_dict(self):
        assert BilliardParams(M=4, m=2).to_dict() == {"M": 4.0, "m": 2.0, "hbar": 1.0}


class TestSemiclassicalConfigVO:
    def test_invalid_level_raises(self):
        with pytest.raises(DomainValidationError):
            SemiclassicalConfig(n=0, params=BilliardParams(), x_min=1.0)

    def test_invalid_retracing_point_raises(self):
        with pytest.raises(DomainValidationError):
            SemiclassicalConfig(n=1, params=BilliardParams(), x_min=0.0)

    def test_amplitude_below_one_half(self):
        for n in range(1, 60):
            a = SemiclassicalConfig(n=n, params=BilliardParams(), x_min=1.0).amplitude
            assert 0 < a < 0.5
        large = SemiclassicalConfig(n=10**6, params=BilliardParams(), x_min=1.0).amplitude
        assert large == pytest.approx(2 / math.pi**2, rel=1e-6)


class TestQuantumModeVO:
    def test_angular_order(self):
        mode = QuantumMode(k=1.0, n=1, beta=math.pi / 10)
        assert mode.l == pytest.approx(10.0)
        assert mode.adjacent().l - mode.l == pytest.approx(math.pi / mode.beta)

    def test_invalid_fields_raise(self):
        with pytest.raises(DomainValidationError):
            QuantumMode(k=0.0, n=1, beta=0.3)
        with pytest.raises(DomainValidationError):
            QuantumMode(k=1.0, n=0, beta=0.3)
        with pytest.raises(DomainValidationError):
            QuantumMode(k=1.0, n=1, beta=2.0)


class TestCylinderValueVO:
    def test_hankel_pair_is_conjugate(self):
        v = CylinderValue(nu=1.0, x=2.0, j=0.5, y=-0.1, jp=0.2, yp=0.6, error_bound=0.0)
        assert v.hankel1 == complex(0.5, -0.1)
        assert v.hankel2 == v.hankel1.conjugate()


class TestCurveSeriesVO:
    def _series(self, xs, ys) -> CurveSeries:
        return CurveSeries(
            abscissa="alpha",
            ordinate="y_over_x",
            model="semiclassical",
            label="n",
            label_value=1,
            points=tuple(zip(xs, ys)),
        )

    def test_header(self):
        assert self._series([0, 1], [0, 1]).header == ("alpha", "y_over_x", "model", "n")

    def test_extremum_scan_on_sine(self):
        xs = np.linspace(0, 4 * np.pi, 401)
        series = self._series(xs, np.sin(xs))
        assert series.extremum_count() == 4
        np.testing.assert_allclose(
            series.extremum_abscissae(),
            [np.pi / 2, 3 * np.pi / 2, 5 * np.pi / 2, 7 * np.pi / 2],
            atol=xs[1] - xs[0],
        )

    def test_flat_steps_do_not_split_runs(self):
        series = self._series([0, 1, 2, 3, 4], [0.0, 1.0, 1.0, 2.0, 1.0])
        assert series.extremum_count() == 1

    def test_dict_round_trip(self):
        series = self._series([0.0, 0.5], [0.25, 0.75])
        assert CurveSeries.from_dict(series.to_dict()) == series
