import json
import os

import numpy as np
import pytest

from splinedq.cli import main


def run_cli(argv):
    return main(argv)


def test_solve_problem1_writes_artifacts(tmp_path):
    out = str(tmp_path)
    code = run_cli(["solve", "--problem", "1", "--basis", "trig", "--N", "10",
                    "--dt", "0.0125", "--t", "0.25", "--out", out])
    assert code == 0
    files = os.listdir(out)
    assert any(f.endswith("report.csv") for f in files)
    assert any(f.endswith("run.log") for f in files)
    log = (tmp_path / "problem1-trig-N10-run.log").read_text()
    assert "steps=20" in log
    csv = (tmp_path / "problem1-trig-N10-report.csv").read_text().splitlines()
    assert csv[0].startswith("basis,lambda,p,N,h,dt")
    assert csv[1].startswith("trig,")
    (payload,) = json.loads((tmp_path / "problem1-trig-N10-report.json").read_text())
    assert payload["N"] == 10 and payload["steps"] == 20
    assert payload["linf"] > 0 and not payload["diverged"]


def test_solve_deterministic_output(tmp_path):
    # byte-identical up to the wall-clock seconds cell, the one telemetry
    # column the report schema carries
    a, b = tmp_path / "a", tmp_path / "b"
    for d in (a, b):
        d.mkdir()
        code = run_cli(["solve", "--problem", "1", "--basis", "ext",
                        "--lambda", "-0.004", "--N", "8", "--dt", "0.01",
                        "--t", "0.1", "--out", str(d)])
        assert code == 0

    def strip_seconds(path):
        lines = path.read_text().splitlines()
        return [",".join(ln.split(",")[:-1]) for ln in lines]

    fa = strip_seconds(a / "problem1-ext-N8-report.csv")
    fb = strip_seconds(b / "problem1-ext-N8-report.csv")
    assert fa == fb and len(fa) == 2


def test_solve_invalid_lambda_exits_with_message(tmp_path, capsys):
    code = run_cli(["solve", "--problem", "1", "--basis", "ext",
                    "--lambda", "2.0", "--N", "8", "--dt", "0.01",
                    "--t", "0.1", "--out", str(tmp_path)])
    assert code == 2
    err = capsys.readouterr().err
    assert "lambda" in err


def test_solve_exp_requires_p(tmp_path):
    code = run_cli(["solve", "--problem", "1", "--basis", "exp", "--N", "8",
                    "--dt", "0.01", "--t", "0.1", "--out", str(tmp_path)])
    assert code == 2


def test_convergence_requires_two_points(tmp_path):
    code = run_cli(["convergence", "--problem", "1", "--basis", "trig",
                    "--sweep", "10", "--out", str(tmp_path)])
    assert code == 2


def test_convergence_sweep_table(tmp_path, capsys):
    code = run_cli(["convergence", "--problem", "1", "--basis", "trig",
                    "--sweep", "6", "12", "--dt", "h2", "--t", "1.0",
                    "--out", str(tmp_path)])
    assert code == 0
    txt = (tmp_path / "problem1-trig-convergence.csv").read_text()
    assert txt.count("\n") == 3   # header + 2 rows
    rows = txt.strip().splitlines()
    assert rows[2].split(",")[9] != ""     # roc_linf column filled on row 2
    out = capsys.readouterr().out
    assert "roc" in out


def test_problem3_dumps_fields(tmp_path):
    code = run_cli(["solve", "--problem", "3", "--basis", "ext", "--lambda",
                    "0", "--N", "11", "--dt", "0.001", "--t", "0.2",
                    "--dump-at", "0.1", "0.2", "--out", str(tmp_path)])
    assert code == 0
    files = os.listdir(tmp_path)
    assert "problem3-ext-N11-field-t0.1.dat" in files
    assert "problem3-ext-N11-field-t0.2.dat" in files
    body = (tmp_path / "problem3-ext-N11-field-t0.1.dat").read_text()
    assert len(body.strip().split("\n\n")) == 11


def test_stability_subcommand(tmp_path, capsys):
    code = run_cli(["stability", "--problem", "1", "--basis", "trig",
                    "--sweep", "11", "--dt", "h2", "--out", str(tmp_path)])
    assert code == 0
    out = capsys.readouterr().out
    assert "verdict: stable" in out
    assert (tmp_path / "spectrum-trig-N11.csv").exists()


def test_stability_cap_refusal(tmp_path):
    code = run_cli(["stability", "--problem", "1", "--basis", "trig",
                    "--sweep", "60", "--dt", "h2", "--out", str(tmp_path)])
    assert code == 2


def test_outdir_environment_variable(tmp_path, monkeypatch):
    monkeypatch.setenv("SPLINEDQ_OUT", str(tmp_path))
    code = run_cli(["solve", "--problem", "1", "--basis", "trig", "--N", "8",
                    "--dt", "0.01", "--t", "0.1"])
    assert code == 0
    assert (tmp_path / "problem1-trig-N8-report.csv").exists()


def test_solve_divergence_exit_code(tmp_path):
    with np.errstate(over="ignore", invalid="ignore"):
        code = run_cli(["solve", "--problem", "1", "--basis", "trig",
                        "--N", "21", "--dt", "0.5", "--t", "40",
                        "--out", str(tmp_path)])
    assert code == 3
