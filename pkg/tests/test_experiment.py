import json

import pytest

from lib.incidence import Config, IncidenceError
from lib.lab import (
    CATALOG,
    TREND_COLUMNS,
    ExperimentRunner,
    GeneratorError,
    GeneratorSpec,
    run_experiment,
    scaling_report,
)


def _status(result, name):
    return next(c for c in result.checks if c["name"] == name)["status"]


def test_experiment_is_reproducible():
    spec = GeneratorSpec("regulus-grid", g=3)
    first, second = run_experiment(spec), run_experiment(spec)
    assert first.dumps() == second.dumps()
    assert "wall_clock" not in json.loads(first.dumps())


def test_regulus_experiment(logger):
    result = ExperimentRunner(logger).run(GeneratorSpec("regulus-grid", g=3), expected_incidences=18)
    assert result.passed
    assert [_status(result, c) for c in ("count", "lemma", "bounds", "projection")] == \
        ["passed", "passed", "passed", "skipped"]
    assert result.report["I"] == 18
    assert result.lemmas["passed"]
    assert result.wall_clock >= 0


def test_four_dimensional_experiment_projects(logger):
    result = ExperimentRunner(logger).run(GeneratorSpec("variety-4d", g=2))
    assert result.passed
    projection = next(c for c in result.checks if c["name"] == "projection")
    assert projection["status"] == "passed"
    assert projection["I"] == 24


def test_settings_reach_the_runner(logger):
    settings = {"bounds": {"C": "1/1000", "q": 3}, "lemmas": {"probe_lines": 5}}
    runner = ExperimentRunner(logger, settings)
    assert runner.q == 3 and runner.probe_lines == 5
    result = runner.run(GeneratorSpec("regulus-grid", g=3), checks=("bounds",))
    assert _status(result, "bounds") == "failed"
    assert not result.passed


def test_count_mismatch_is_a_failure(logger):
    result = ExperimentRunner(logger).run(GeneratorSpec("regulus-grid", g=2), checks=("count",),
                                          expected_incidences=9)
    check = result.checks[0]
    assert check["status"] == "failed"
    assert (check["I"], check["expected"]) == (8, 9)


def test_check_errors_are_reported(logger):
    sphere = Config(3, (), (), CATALOG["sphere"].surface(), name="sphere")
    result = ExperimentRunner(logger).run(config=sphere, checks=("lemma",))
    assert result.checks[0]["status"] == "error"
    assert "UncataloguedSurfaceError" in result.checks[0]["error"]
    assert not result.passed


def test_runner_input_errors(logger):
    runner = ExperimentRunner(logger)
    with pytest.raises(GeneratorError):
        runner.run()
    with pytest.raises(GeneratorError):
        runner.run(GeneratorSpec("regulus-grid", g=2), checks=("count", "nope"))


def test_scaling_on_the_regulus_grid():
    trend = scaling_report("regulus-grid", [2, 3, 4], "TH13A")
    assert list(trend.frame.columns) == TREND_COLUMNS
    assert list(trend.frame["I"]) == [8, 18, 32]
    assert trend.all_hold
    assert trend.max_ratio < 1
    assert trend.summary["sizes"] == [2, 3, 4]


def test_scaling_errors():
    with pytest.raises(GeneratorError):
        scaling_report("regulus-grid", [2, 3], "TH13A")
    with pytest.raises(IncidenceError):
        scaling_report("elekes", [1, 2, 3], "TH13A")
    assert scaling_report("elekes", [1, 2, 3], "ST").all_hold
