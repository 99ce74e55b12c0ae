"""Command line entry points, exercised in process through main(argv)."""

import json
import os

import pytest

from fracsqueeze.cli import main


def run_small_sweep(out, extra=()):
    argv = [
        "sweep", "--n-min", "0", "--n-max", "1", "--n-step", "0.5",
        "--ladder-base", "4", "--doublings", "3", "--out", str(out),
    ]
    return main(argv + list(extra))


def test_sweep_success_exit_and_artifacts(tmp_path, capsys):
    code = run_small_sweep(tmp_path / "run")
    out = capsys.readouterr().out
    assert code == 0
    assert "cells: 12 total, 0 failed" in out
    assert os.path.exists(tmp_path / "run" / "sweep.csv")
    assert os.path.exists(tmp_path / "run" / "manifest.json")


def test_sweep_partial_failure_exit(tmp_path, capsys):
    code = main([
        "sweep", "--n-min", "220", "--n-max", "220", "--n-step", "1",
        "--ladder-base", "8", "--doublings", "1",
        "--out", str(tmp_path / "run"),
    ])
    assert code == 2
    assert "2 failed" in capsys.readouterr().out


def test_sweep_rejects_bad_step(tmp_path):
    code = main([
        "sweep", "--n-step", "0", "--out", str(tmp_path / "run"),
    ])
    assert code == 1


def test_desk_flag_caps_doublings(tmp_path):
    code = main([
        "sweep", "--n-min", "0", "--n-max", "0", "--n-step", "1",
        "--ladder-base", "4", "--doublings", "7", "--desk",
        "--out", str(tmp_path / "run"),
    ])
    assert code == 0
    manifest = json.load(open(tmp_path / "run" / "manifest.json"))
    assert manifest["config"]["ladder_doublings"] == 5
    assert manifest["grid"]["N"] == [4, 8, 16, 32, 64, 128]


def test_analyze_and_plot(tmp_path, capsys):
    run = tmp_path / "run"
    assert run_small_sweep(run) == 0
    assert main(["analyze", "--run", str(run)]) == 0
    assert "0 failed" in capsys.readouterr().out
    assert os.path.exists(run / "analysis.csv")
    assert main(["plot", "--run", str(run)]) == 0
    assert os.path.exists(run / "plots" / "plot_all.gp")


def test_analyze_short_ladder_reports_partial_failure(tmp_path):
    run = tmp_path / "run"
    code = main([
        "sweep", "--n-min", "0", "--n-max", "1", "--n-step", "0.5",
        "--ladder-base", "4", "--doublings", "2", "--out", str(run),
    ])
    assert code == 0
    assert main(["analyze", "--run", str(run)]) == 2  # too few ladder points


def test_analyze_alpha_windows_flag(tmp_path):
    run = tmp_path / "run"
    assert run_small_sweep(run) == 0
    code = main([
        "analyze", "--run", str(run),
        "--alpha-windows", "e:0.2:0.8",
        "--alpha-windows", "e:0.1:0.9",
    ])
    assert code == 0
    lines = json.load(open(run / "alpha_lines.json"))
    bounds = [entry["window"] for entry in lines["alpha_e"]]
    assert bounds == [[0.2, 0.8], [0.1, 0.9]]
    # untouched series keeps its default windows
    assert [e["window"] for e in lines["alpha_m"]] == [[2.5, 3.5], [4.5, 5.5]]


def test_analyze_bad_window_spec(tmp_path):
    run = tmp_path / "run"
    assert run_small_sweep(run) == 0
    assert main(["analyze", "--run", str(run),
                 "--alpha-windows", "q:0:1"]) == 1
    assert main(["analyze", "--run", str(run),
                 "--alpha-windows", "e:2:1"]) == 1


def test_analyze_missing_run(tmp_path):
    assert main(["analyze", "--run", str(tmp_path / "nowhere")]) == 1


def test_toy_passes_and_prints_table(capsys):
    code = main(["toy", "--max-size", "6", "--ratios", "10,100"])
    out = capsys.readouterr().out
    assert code == 0
    assert "PASS" in out and "FAIL" not in out


def test_toy_invalid_size():
    assert main(["toy", "--max-size", "1"]) == 1


def test_dynamics_writes_trajectory(tmp_path, capsys):
    out = tmp_path / "traj.csv"
    code = main(["dynamics", "--n", "1", "--N", "4",
                 "--samples", "64", "--out", str(out)])
    assert code == 0
    assert "amplitude of <m>" in capsys.readouterr().out
    header = open(out).readline().strip()
    assert header == "r,m_expect,photon_number,norm"


def test_dynamics_odd_size_needs_explicit_window(tmp_path):
    out = str(tmp_path / "traj.csv")
    assert main(["dynamics", "--n", "1", "--N", "3",
                 "--samples", "32", "--out", out]) == 1
    assert main(["dynamics", "--n", "1", "--N", "3",
                 "--samples", "32", "--r-max", "2.0", "--out", out]) == 0


def test_usage_errors_exit_one(capsys):
    with pytest.raises(SystemExit) as info:
        main(["sweep"])  # missing required --out
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 1
    capsys.readouterr()


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert capsys.readouterr().out.strip()
