# backend/tests/billiards/test_use_cases_billiards.py
import csv
import json
import math
from unittest.mock import patch

import pytest
from django.core.cache import cache

from billiards.application.use_cases import (
    FIGURE_BETA,
    MANIFEST_NAME,
    CountUseCase,
    DigitsUseCase,
    FiguresUseCase,
    PhaseShiftUseCase,
    QuantumUseCase,
    RunConfig,
    SemiclassicalUseCase,
    SimulateUseCase,
    resolve_geometry,
    run,
)
from core.exceptions import DomainValidationError, NumericalIndeterminacyError

FIGURE_FILES = (
    "fig3_classical",
    "fig3_n1",
    "fig3_n10",
    "fig5_classical",
    "fig5_l10",
    "fig5_l100",
)


@pytest.fixture(autouse=True)
def clear_cache():
    cache.clear()
    yield
    cache.clear()


class TestRunConfig:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"subcommand": "plot"},
            {"subcommand": "quantum", "samples": 1},
            {"subcommand": "quantum", "output_format": "xml"},
            {"subcommand": "simulate", "incidence": "grazing"},
            {"subcommand": "count", "significant_digits": 0},
            {"subcommand": "count", "significant_digits": 18},
        ],
    )
    def test_invalid_config_raises(self, kwargs):
        with pytest.raises(DomainValidationError):
            RunConfig(**kwargs)

    def test_digits_default_from_settings(self, settings):
        settings.PI_BILLIARDS_SIGNIFICANT_DIGITS = 5
        assert RunConfig(subcommand="count").digits == 5
        assert RunConfig(subcommand="count", significant_digits=3).digits == 3


class TestResolveGeometry:
    def test_each_option(self, tmp_path):
        assert resolve_geometry(RunConfig("count", beta=0.3)).beta == pytest.approx(0.3)
        assert resolve_geometry(RunConfig("count", mass_ratio="100")).R == pytest.approx(10.0)
        assert resolve_geometry(RunConfig("count", mass_ratio="1/4")).ratio == 0.25
        assert resolve_geometry(RunConfig("count", N=3)).exact_ratio == 100**3

        inline = resolve_geometry(RunConfig("count", params_json='{"M": 9, "m": 1}'))
        assert inline.R == pytest.approx(3.0)

        path = tmp_path / "params.json"
        path.write_text(json.dumps({"M": 16, "m": 1, "hbar": 0.5}))
        from_file = resolve_geometry(RunConfig("count", params_json=str(path)))
        assert (from_file.R, from_file.hbar) == (4.0, 0.5)

    def test_missing_or_repeated_geometry_raises(self):
        with pytest.raises(DomainValidationError):
            resolve_geometry(RunConfig("count"))
        with pytest.raises(DomainValidationError):
            resolve_geometry(RunConfig("count", beta=0.3, mass_ratio="4"))

    def test_default_angle(self):
        params = resolve_geometry(RunConfig("figures"), default_beta=FIGURE_BETA)
        assert params.beta == pytest.approx(math.pi / 10)

    @pytest.mark.parametrize("raw", ["abc", "1/0", "-4"])
    def test_invalid_ratio_raises(self, raw):
        with pytest.raises(DomainValidationError):
            resolve_geometry(RunConfig("count", mass_ratio=raw))

    def test_invalid_json_raises(self):
        with pytest.raises(DomainValidationError):
            resolve_geometry(RunConfig("count", params_json="{M: 1"))


class TestDigitsUseCase:
    def test_prints_value_and_certificate(self):
        outcome = DigitsUseCase.execute(config=RunConfig("digits", N=3))
        assert outcome.lines[0] == "3141"
        assert outcome.lines[1].startswith("precision_bits=")
        assert "guard_digits=" in outcome.lines[1]
        assert outcome.artifacts == []

    def test_second_run_served_from_cache(self):
        first = DigitsUseCase.execute(config=RunConfig("digits", N=8))
        with patch("billiards.application.use_cases.pi_digits") as pi_digits_mock:
            second = DigitsUseCase.execute(config=RunConfig("digits", N=8))
        pi_digits_mock.assert_not_called()
        assert second.lines == first.lines

    def test_precision_ceiling_from_settings(self, settings):
        settings.PI_BILLIARDS_PRECISION_BITS = 64
        with pytest.raises(NumericalIndeterminacyError):
            DigitsUseCase.execute(config=RunConfig("digits", N=20))

    def test_missing_N_raises(self):
        with pytest.raises(DomainValidationError):
            DigitsUseCase.execute(config=RunConfig("digits"))

    def test_manifest_on_request(self, tmp_path):
        target = tmp_path / "digits.json"
        outcome = DigitsUseCase.execute(config=RunConfig("digits", N=2, manifest=target))
        assert outcome.artifacts == [target]
        payload = json.loads(target.read_text())
        assert payload["value"] == "314"
        assert payload["subcommand"] == "digits"


class TestCountUseCase:
    @pytest.mark.parametrize(
        "kwargs, expected",
        [
            ({"mass_ratio": "100"}, "31"),
            ({"mass_ratio": "1"}, "3"),
            ({"beta": math.pi / 10}, "9"),
            ({"N": 0}, "3"),
            ({"N": 1}, "31"),
            ({"params_json": '{"M": 10000}'}, "314"),
        ],
    )
    def test_examples(self, kwargs, expected):
        assert CountUseCase.execute(config=RunConfig("count", **kwargs)).lines == [expected]

    def test_large_N_uses_interval_arithmetic(self):
        lines = CountUseCase.execute(config=RunConfig("count", N=40)).lines
        assert len(lines[0]) == 41
        assert lines[0].startswith("31415926535897932384")

    def test_negative_N_raises(self):
        with pytest.raises(DomainValidationError):
            CountUseCase.execute(config=RunConfig("count", N=-1))


class TestSimulateUseCase:
    def test_print_only_run_writes_nothing(self, tmp_path):
        outcome = SimulateUseCase.execute(config=RunConfig("simulate", mass_ratio="100"))
        assert outcome.lines == ["collisions=31", "mode=exact"]
        assert outcome.artifacts == []
        assert not (tmp_path / MANIFEST_NAME).exists()

    def test_bisector_incidence(self):
        config = RunConfig("simulate", beta=math.pi / 10, incidence="bisector")
        assert SimulateUseCase.execute(config=config).lines[0] == "collisions=10"

    def test_trace_curve_and_manifest(self, tmp_path):
        config = RunConfig(
            "simulate",
            mass_ratio="100",
            samples=64,
            trace_out=tmp_path / "trace.csv",
            out=tmp_path / "curve.csv",
        )
        outcome = SimulateUseCase.execute(config=config)
        assert [p.name for p in outcome.artifacts] == ["trace.csv", "curve.csv", MANIFEST_NAME]

        with open(tmp_path / "trace.csv", newline="") as handle:
            rows = list(csv.reader(handle))
        assert rows[0] == ["index", "kind", "t", "x", "y", "vx", "vy"]
        assert len(rows) == 32
        assert {row[1] for row in rows[1:]} == {"BallBall", "BallWall"}

        curve_rows = (tmp_path / "curve.csv").read_text().splitlines()
        assert curve_rows[0] == "alpha,y_over_x,model,n"
        assert len(curve_rows) == 65
        assert curve_rows[1].endswith(",classical,")

        manifest = json.loads((tmp_path / MANIFEST_NAME).read_text())
        assert manifest["collisions"] == 31
        assert manifest["artifacts"] == ["trace.csv", "curve.csv"]


class TestCurveUseCases:
    def test_semiclassical_to_stdout(self):
        config = RunConfig("semiclassical", mass_ratio="100", n=1, samples=20)
        lines = SemiclassicalUseCase.execute(config=config).lines
        assert lines[0] == "alpha,y_over_x,model,n"
        assert len(lines) == 21
        assert all(line.endswith(",semiclassical,1") for line in lines[1:])

    def test_level_required(self):
        with pytest.raises(DomainValidationError):
            SemiclassicalUseCase.execute(config=RunConfig("semiclassical", mass_ratio="100"))
        with pytest.raises(DomainValidationError):
            QuantumUseCase.execute(config=RunConfig("quantum", beta=0.3))

    def test_quantum_csv(self):
        config = RunConfig("quantum", beta=math.pi / 10, n=1, samples=30)
        lines = QuantumUseCase.execute(config=config).lines
        assert lines[0] == "eta,theta_over_beta,model,l"
        assert all(line.endswith(",quantum,10") for line in lines[1:])

    def test_quantum_json(self):
        config = RunConfig(
            "quantum", beta=math.pi / 10, n=1, samples=30, output_format="json"
        )
        payload = json.loads("\n".join(QuantumUseCase.execute(config=config).lines))
        assert payload["label"] == "l"
        assert len(payload["points"]) == 30
        assert payload["metadata"]["wave"] == "incident"

    def test_quantum_trip(self):
        config = RunConfig("quantum", beta=math.pi / 10, n=1, samples=10, trip=True)
        lines = QuantumUseCase.execute(config=config).lines
        assert float(lines[1].split(",")[0]) < 0 < float(lines[-1].split(",")[0])

    def test_manifest_only_on_request(self, tmp_path):
        target = tmp_path / "sub" / "run.json"
        config = RunConfig(
            "semiclassical", mass_ratio="4", n=2, samples=5, manifest=target
        )
        outcome = SemiclassicalUseCase.execute(config=config)
        assert outcome.artifacts == [target]
        payload = json.loads(target.read_text())
        assert payload["curve"]["extremum_count"] == 6
        assert payload["artifacts"] == []


class TestPhaseShiftUseCase:
    def test_lines(self):
        config = RunConfig("phaseshift", beta=math.pi / 10, n=1)
        lines = PhaseShiftUseCase.execute(config=config).lines
        assert lines[0].startswith("delta=")
        assert lines[0].endswith("(10.5 pi)")
        assert lines[1].startswith("delta_difference=")
        assert lines[1].endswith("(10 pi)")

    def test_digits_option(self):
        config = RunConfig("phaseshift", beta=math.pi / 10, n=1, significant_digits=4)
        assert PhaseShiftUseCase.execute(config=config).lines[0] == "delta=32.99 (10.5 pi)"


class TestFiguresUseCase:
    def _run(self, directory):
        return run(RunConfig("figures", out=directory, samples=40))

    def test_writes_every_figure(self, tmp_path):
        outcome = self._run(tmp_path)
        names = [p.name for p in outcome.artifacts]
        assert names == [f"{name}.csv" for name in FIGURE_FILES] + [MANIFEST_NAME]

        manifest = json.loads((tmp_path / MANIFEST_NAME).read_text())
        assert manifest["beta"] == pytest.approx(math.pi / 10)
        assert manifest["figures"]["fig3_classical"]["collisions"] == 10
        assert manifest["figures"]["fig3_n1"]["extremum_count"] == 9
        assert manifest["figures"]["fig5_l100"]["n"] == 10

        header = (tmp_path / "fig5_l10.csv").read_text().splitlines()[0]
        assert header == "eta,theta_over_beta,model,l"

    def test_identical_runs_give_identical_files(self, tmp_path):
        self._run(tmp_path / "a")
        self._run(tmp_path / "b")
        for name in [f"{n}.csv" for n in FIGURE_FILES] + [MANIFEST_NAME]:
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()

    def test_output_directory_required(self):
        with pytest.raises(DomainValidationError):
            FiguresUseCase.execute(config=RunConfig("figures"))
