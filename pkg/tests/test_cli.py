import csv
import json

import pytest

from src.cli import SweepSpec, main
from src.errors import TruncationError
from src.models import Model


def read_rows(path):
    with open(path, newline="") as f:
        return list(csv.DictReader(f))


def test_exact_ladder(capsys):
    assert main(["exact", "ladder", "1"]) == 0
    out = capsys.readouterr().out
    assert "1.4647" in out
    assert "chain-solve speed" in out


def test_exact_with_flags(capsys):
    assert main(["exact", "--model", "diagonal", "--lambda", "0"]) == 0
    assert "2.584" in capsys.readouterr().out


def test_exact_outside_regime():
    assert main(["exact", "ladder", "0.01"]) == 2


def test_exact_needs_lambda():
    with pytest.raises(SystemExit) as info:
        main(["exact", "ladder"])
    assert info.value.code == 2


def test_chain_command(capsys):
    assert main(["chain", "diagonal", "1", "--truncation", "50"]) == 0
    out = capsys.readouterr().out
    assert "tail mass" in out
    assert "residual" in out


def test_sweep_writes_header_and_rows(tmp_path):
    out = tmp_path / "sweep.csv"
    args = ["sweep", "--model", "ladder", "--lambda-min", "0.04", "--lambda-max", "20",
            "--points", "2", "--out", str(out)]
    assert main(args) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "lambda,speed,pi0,method"
    assert len(lines) == 3


def test_ladder_sweep_is_increasing(tmp_path):
    out = tmp_path / "ladder.csv"
    main(["sweep", "--model", "ladder", "--lambda-min", "0.04", "--lambda-max", "20",
          "--points", "8", "--scale", "log", "--out", str(out)])
    speeds = [float(r["speed"]) for r in read_rows(out)]
    assert all(1.0 < s < 2.0 for s in speeds)
    assert all(b > a for a, b in zip(speeds, speeds[1:]))


def test_diagonal_sweep_bounds(tmp_path):
    out = tmp_path / "diagonal.csv"
    main(["sweep", "--model", "diagonal", "--lambda-min", "0", "--lambda-max", "20",
          "--points", "6", "--out", str(out)])
    rows = read_rows(out)
    assert len(rows) == 6
    assert all(2.56 < float(r["speed"]) < 4.0 for r in rows)
    assert {r["method"] for r in rows} == {"exact-gf"}
    speeds = [float(r["speed"]) for r in rows]
    assert all(b > a for a, b in zip(speeds, speeds[1:]))


def test_sweep_spec_validation():
    with pytest.raises(ValueError):
        SweepSpec(model=Model.LADDER, lambda_min=0.0, lambda_max=1.0, points=3)
    with pytest.raises(ValueError):
        SweepSpec(model=Model.DIAGONAL, lambda_min=2.0, lambda_max=1.0, points=3)
    with pytest.raises(ValueError):
        SweepSpec(model=Model.DIAGONAL, lambda_min=0.0, lambda_max=1.0, points=3, scale="log")
    grid = SweepSpec(model=Model.DIAGONAL, lambda_min=0.0, lambda_max=1.0, points=3).grid()
    assert grid == pytest.approx([0.0, 0.5, 1.0])


def test_simulate_needs_two_replicas():
    assert main(["simulate", "--model", "ladder", "--lambda", "1", "--height", "1000",
                 "--replicas", "1"]) == 2


def test_simulate_needs_lambda():
    assert main(["simulate", "--model", "ladder", "--height", "1000", "--replicas", "2"]) == 2


def test_simulate_json(capsys, tmp_path):
    out = tmp_path / "estimate.json"
    code = main(["simulate", "--model", "ladder", "--lambda", "1", "--height", "1000",
                 "--replicas", "2", "--workers", "1", "--seed", "3", "--json", "--out", str(out)])
    assert code == 0
    printed = json.loads(capsys.readouterr().out)
    assert printed["replicas"] == 2
    assert printed["seed"] == 3
    assert json.loads(out.read_text()) == printed


def test_simulate_from_spec_file(capsys, tmp_path):
    spec = tmp_path / "cell.json"
    spec.write_text(json.dumps({"vertical": 1.0, "horiz0": 1.0, "horiz1": 1.0, "diag_up": 1.0}))
    code = main(["simulate", str(spec), "--height", "1000", "--replicas", "2", "--workers", "1"])
    assert code == 0
    assert "reference:" in capsys.readouterr().out


def test_simulate_rejects_non_percolating_spec(tmp_path):
    spec = tmp_path / "cell.json"
    spec.write_text(json.dumps({"vertical": 1.0}))
    assert main(["simulate", str(spec), "--height", "1000", "--replicas", "2"]) == 2


@pytest.mark.parametrize("error", [
    OverflowError("math range error"),
    TruncationError(3200, 1e-3, 1e-10),
])
def test_numeric_failure_exits_one(monkeypatch, error):
    def fail(*args, **kwargs):
        raise error

    monkeypatch.setattr("src.cli.speed_ladder", fail)
    assert main(["exact", "ladder", "1"]) == 1
