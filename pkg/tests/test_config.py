import json
from pathlib import Path

import pytest
from pydantic import ValidationError

from bounded_credible.config import (
    OUTPUT_DIR_ENV,
    config_hash,
    load_run_config,
    resolve_output_path,
)
from bounded_credible.schemas.config import Command, OutputFormat, RunConfig


def _write_config(tmp_path: Path, values) -> str:
    path = tmp_path / "run.json"
    path.write_text(json.dumps(values))
    return str(path)


def test_defaults():
    config = load_run_config(None, command="coverage")

    assert config.command is Command.coverage
    assert config.model == "location-normal"
    assert config.alpha == 0.05
    assert config.spending == "equal-tails"
    assert config.grid == 51
    assert config.reps == 100_000
    assert config.format is OutputFormat.csv


def test_validate_grid_default():
    assert load_run_config(None, command="validate").grid == 1001


def test_flags_override_file(tmp_path):
    config_path = _write_config(
        tmp_path, {"model": "scale-gamma", "shape": 2.0, "alpha": 0.1, "reps": 20_000}
    )

    config = load_run_config(config_path, command="coverage", alpha=0.05, reps=None)

    assert config.model == "scale-gamma"
    assert config.shape == 2.0
    assert config.alpha == 0.05
    assert config.reps == 20_000


def test_unknown_field_is_rejected(tmp_path):
    config_path = _write_config(tmp_path, {"replicates": 10})

    with pytest.raises(ValidationError):
        load_run_config(config_path, command="coverage")


@pytest.mark.parametrize(
    "values",
    [
        {"command": "coverage", "reps": 9_999},
        {"command": "coverage", "alpha": 1.0},
        {"command": "coverage", "model": "location-cauchy"},
        {"command": "coverage", "spending": "optimal"},
        {"command": "coverage", "max_concurrency": 0},
        {"command": "validate", "grid": 0},
        {"command": "interval"},
    ],
)
def test_invalid_configs(values):
    with pytest.raises(ValidationError):
        RunConfig.parse_obj(values)


def test_comma_separated_lists():
    config = RunConfig.parse_obj(
        {"command": "interval", "x": "1.5, 2", "weights": "1,-1", "shapes": "2,1"}
    )

    assert config.x == [1.5, 2.0]
    assert config.weights == [1.0, -1.0]
    assert config.shapes == [2.0, 1.0]
    assert RunConfig.parse_obj({"command": "interval", "x": 2.0}).x == [2.0]


def test_model_params():
    config = RunConfig.parse_obj(
        {"command": "validate", "model": "homogeneous-scale-normal", "weights": "1,-1", "n": 6}
    )

    assert config.model_params() == {"weights": [1.0, -1.0], "n": 6}


def test_tsv_delimiter():
    assert OutputFormat.tsv.delimiter == "\t"
    assert OutputFormat.csv.delimiter == ","


def test_config_hash_is_stable():
    first = load_run_config(None, command="coverage", seed=3)
    second = load_run_config(None, command="coverage", seed=3, output="a.csv")
    other = load_run_config(None, command="coverage", seed=4)

    assert config_hash(first) == config_hash(second)
    assert config_hash(first) != config_hash(other)
    assert len(config_hash(first)) == 16


def test_output_path_from_flag(monkeypatch):
    monkeypatch.setenv(OUTPUT_DIR_ENV, "/tmp/elsewhere")
    config = load_run_config(None, command="validate", output="out/report.csv")

    assert resolve_output_path(config) == Path("out/report.csv")


def test_output_path_from_environment(monkeypatch, tmp_path):
    monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path))
    config = load_run_config(None, command="validate", format="tsv")

    assert resolve_output_path(config) == tmp_path / f"validate-{config_hash(config)}.tsv"


def test_output_path_defaults_to_stdout(monkeypatch):
    monkeypatch.delenv(OUTPUT_DIR_ENV, raising=False)

    assert resolve_output_path(load_run_config(None, command="validate")) is None
