"""Experiment presets, config plumbing, determinism, and the CLI."""

import json
import math

import numpy as np
import pytest

from clocksim.cli import main
from clocksim.experiments import (
    SWEEP_FIELDS,
    clock_speed_ratio_sweep,
    config_hash,
    load_config,
    run_experiment,
    standard_fk_run,
    standard_lin_run,
    sweep_scaling,
)


def fk_config(**overrides):
    cfg = {
        "schema_version": 1,
        "family": "fk",
        "circuit": {"generator": "identity", "n": 1, "gates": 300},
        "packet": {"type": "gaussian", "sigma": 0.05, "x0": 0.2, "p0": 240.0, "cutoff": 4.0},
        "evolution": {"t_final": None, "samples": 101, "method": "spectral-subspace"},
    }
    cfg.update(overrides)
    return cfg


def test_standard_fk_run_fields_and_sanity():
    row = standard_fk_run(60, samples=101)
    assert set(SWEEP_FIELDS) <= set(row)
    assert row["G"] == 60
    assert row["E_mean"] > 0
    assert 0 <= row["p_success"] <= 1
    assert row["orth_count"] >= 3
    assert row["final_center"] > 3 * 60  # packet reached the success window


def test_standard_lin_run_fields_and_sanity():
    row = standard_lin_run(60, samples=101)
    assert row["T"] == 60.0
    assert abs(row["E_mean"]) < 1e-10
    assert row["p_success"] > 0.99
    # packet moves two sites per unit time
    assert row["f_clock"] == pytest.approx(2.0, rel=0.02)
    with pytest.raises(ValueError):
        standard_lin_run(61)


def test_sweep_requires_multiple_points():
    with pytest.raises(ValueError):
        clock_speed_ratio_sweep("fk", [100])
    with pytest.raises(ValueError):
        clock_speed_ratio_sweep("fk", [100, 100])


def test_sweep_slopes_small():
    rows, slopes = clock_speed_ratio_sweep("lin", [30, 60, 120], samples=51)
    assert [r["G"] for r in rows] == [30, 60, 120]
    assert slopes["slope_E_std"] == pytest.approx(-1.0, abs=0.02)
    assert slopes["slope_ratio_dE"] == pytest.approx(1.0, abs=0.02)
    assert slopes["slope_ratio_E"] is None  # mean energy is exactly zero


def test_run_experiment_is_deterministic(tmp_path):
    cfg = fk_config()
    r1 = run_experiment(cfg, out_dir=tmp_path / "a")
    r2 = run_experiment(cfg, out_dir=tmp_path / "b")
    assert r1["config_hash"] == r2["config_hash"]
    assert (tmp_path / "a" / "series.csv").read_bytes() == (
        tmp_path / "b" / "series.csv"
    ).read_bytes()
    assert json.loads((tmp_path / "a" / "summary.json").read_text())["metrics"] == json.loads(
        (tmp_path / "b" / "summary.json").read_text()
    )["metrics"]


def test_config_hash_is_order_insensitive():
    a = {"x": 1, "y": [1, 2]}
    b = {"y": [1, 2], "x": 1}
    assert config_hash(a) == config_hash(b)
    assert config_hash(a) != config_hash({"x": 2, "y": [1, 2]})


def test_load_config_rejects_unknown_schema(tmp_path):
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps(fk_config(schema_version=99)))
    with pytest.raises(ValueError):
        load_config(p)


def test_dense_fullspace_cross_validates_subspace():
    """Full-space evolution of a real 2-qubit circuit reproduces the
    gate-independent chain dynamics with negligible leakage."""
    circuit_spec = {
        "n": 2,
        "gates": [{"name": "H", "targets": [0]}, {"name": "CNOT", "targets": [0, 1]}]
        + [{"name": "X", "targets": [1]}, {"name": "SWAP", "targets": [0, 1]}] * 2,
    }
    base = {
        "schema_version": 1,
        "family": "fk",
        "packet": {"type": "gaussian", "sigma": 0.12, "x0": 0.5, "p0": 4.0, "cutoff": 4.0},
        "evolution": {"t_final": 2.0, "samples": 21, "method": "spectral-subspace"},
    }
    results = {}
    for method, encoding in [
        ("spectral-subspace", {"kind": "pulse", "r": 1}),
        ("dense-fullspace", {"kind": "pulse", "r": 1}),
        ("dense-fullspace", {"kind": "combinadic", "r": 2}),
    ]:
        cfg = dict(base)
        cfg["circuit"] = circuit_spec
        cfg["encoding"] = encoding
        cfg["evolution"] = dict(base["evolution"], method=method)
        results[(method, encoding["kind"])] = run_experiment(cfg)
    ref = results[("spectral-subspace", "pulse")]["series"]
    for key, res in results.items():
        if key[0] == "dense-fullspace":
            assert res["leakage"] < 1e-10
            assert np.allclose(res["series"]["center"], ref["center"], atol=1e-8)
            assert np.allclose(
                res["series"]["overlap_initial"], ref["overlap_initial"], atol=1e-8
            )


def test_cli_clock_table(capsys):
    assert main(["clock", "--encoding", "combinadic", "--capacity", "6", "--r", "2"]) == 0
    out = capsys.readouterr().out
    assert "0011" in out and "1100" in out
    assert "flips [0, 1, 2, 3]" in out  # the 0110 -> 1001 transition


def test_cli_build_and_audit(tmp_path, capsys):
    circ = tmp_path / "bell.json"
    circ.write_text(
        json.dumps(
            {"n": 2, "gates": [{"name": "H", "targets": [0]}, {"name": "CNOT", "targets": [0, 1]}]}
        )
    )
    terms = tmp_path / "terms.json"
    assert main(["build", "--circuit", str(circ), "--family", "fk", "--out", str(terms)]) == 0
    payload = json.loads(terms.read_text())
    assert payload["n_total"] == 2 + 3  # 2 qubits + 3 one-hot clock bits
    assert len(payload["terms"]) == 3 * 2  # per gate: hop + two projectors

    report = tmp_path / "audit.json"
    assert main(["audit", "--circuit", str(circ), "--family", "fk", "--out", str(report)]) == 0
    audit = json.loads(report.read_text())
    assert audit["weight_ok"] and audit["max_weight"] <= audit["weight_bound"] == 4


def test_cli_compile2d_example(tmp_path):
    out = tmp_path / "grid.json"
    assert main(["compile2d", "--example", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert (payload["n_rows"], payload["n_cols"]) == (6, 3)
    assert payload["clock_path_points"] == 19
    assert payload["max_step_diameter"] <= 2.0


def test_cli_evolve_and_sweep(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps(fk_config()))
    assert main(["evolve", "--config", str(cfg), "--out", str(tmp_path / "run")]) == 0
    summary = json.loads((tmp_path / "run" / "summary.json").read_text())
    assert summary["gate_count"] == 300
    assert 0 <= summary["metrics"]["p_success"] <= 1

    assert (
        main(
            ["sweep", "--family", "lin", "--G", "30,60", "--out", str(tmp_path / "sw"),
             "--samples", "51"]
        )
        == 0
    )
    csv_lines = (tmp_path / "sw" / "sweep_lin.csv").read_text().strip().splitlines()
    assert csv_lines[0].split(",") == SWEEP_FIELDS
    assert len(csv_lines) == 3
    slopes = json.loads((tmp_path / "sw" / "sweep_lin.json").read_text())["slopes"]
    assert slopes["slope_E_std"] == pytest.approx(-1.0, abs=0.05)


def test_cli_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
