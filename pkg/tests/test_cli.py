"""CLI and experiment-driver contract tests on small configurations."""

import csv
import hashlib
import json
import math
from pathlib import Path

import numpy as np
import pytest

from msmnet import cli
from msmnet.theory import QuadratureError


def run_cli(args):
    return cli.main(args)


def read_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    return rows[0], rows[1:]


def file_hash(path):
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


class TestClusteringFunctionCommand:
    def test_file_contract(self, tmp_path):
        out = tmp_path / "run"
        code = run_cli([
            "clustering-function", "--alpha", "0.3", "--n", "100", "--reps", "1",
            "--seed", "7", "--out", str(out), "--tol", "1e-6",
        ])
        assert code == 0
        profile = out / "profile_alpha0p3_n100_rep0.csv"
        curve = out / "curve_alpha0p3_n100.csv"
        manifest = out / "manifest.json"
        assert profile.exists() and curve.exists() and manifest.exists()
        header, rows = read_csv(profile)
        assert header == ["k", "a", "N_k", "C_k"]
        for k, a, nk, ck in rows:
            assert int(k) >= 2
            assert float(a) == pytest.approx(int(k) / math.sqrt(100))
            assert int(nk) >= 1
            assert 0.0 <= float(ck) <= 1.0
        header, rows = read_csv(curve)
        assert header == ["a", "c_bar", "c_hub", "quad_error", "alpha"]
        registry = json.loads(manifest.read_text())
        assert str(profile) in registry["outputs"].values()
        sidecar = json.loads(profile.with_suffix(".json").read_text())
        assert sidecar["schema_version"] == 1
        assert "version" in sidecar and "runtime_s" in sidecar
        assert sidecar["seed"] == 7

    def test_same_seed_byte_identical(self, tmp_path):
        args = ["clustering-function", "--alpha", "0.5", "--n", "80", "--reps", "2",
                "--seed", "99", "--tol", "1e-6"]
        out1, out2 = tmp_path / "a", tmp_path / "b"
        assert run_cli(args + ["--out", str(out1)]) == 0
        assert run_cli(args + ["--out", str(out2)]) == 0
        csvs1 = sorted(p.name for p in out1.glob("*.csv"))
        csvs2 = sorted(p.name for p in out2.glob("*.csv"))
        assert csvs1 == csvs2 and csvs1
        for name in csvs1:
            assert file_hash(out1 / name) == file_hash(out2 / name), name


class TestSweepCommands:
    def test_avg_clustering_summary(self, tmp_path):
        out = tmp_path / "sweep"
        code = run_cli([
            "avg-clustering", "--alpha", "0.5", "--n", "50,100", "--reps", "3",
            "--seed", "11", "--out", str(out),
        ])
        assert code == 0
        header, rows = read_csv(out / "fractions_alpha0p5_redraw.csv")
        assert header == [
            "n", "alpha", "seed", "mode",
            "r0_emp", "r1_emp", "r0_exact", "r1_exact", "r0_approx", "r1_approx",
            "c_excl", "c_incl",
        ]
        assert len(rows) == 6
        assert [int(r[0]) for r in rows] == [50, 50, 50, 100, 100, 100]
        header, rows = read_csv(out / "summary_alpha0p5_redraw.csv")
        assert header[0:3] == ["n", "mode", "reps"]
        assert len(rows) == 2
        # full round-trip precision: values parse to exact repr
        for row in rows:
            for cell in row[3:]:
                assert repr(float(cell)) == cell

    def test_mode_separation(self, tmp_path):
        fixed_out = tmp_path / "fixed"
        run_cli(["avg-clustering", "--n", "40", "--reps", "3", "--seed", "5",
                 "--mode", "fixed", "--out", str(fixed_out)])
        hashes = {file_hash(p) for p in fixed_out.glob("weights_*_rep*.csv")}
        assert len(hashes) == 1
        redraw_out = tmp_path / "redraw"
        run_cli(["avg-clustering", "--n", "40", "--reps", "3", "--seed", "5",
                 "--mode", "redraw", "--out", str(redraw_out)])
        hashes = {file_hash(p) for p in redraw_out.glob("weights_*_rep*.csv")}
        assert len(hashes) == 3

    def test_degree_fractions_stable_source(self, tmp_path):
        out = tmp_path / "frac"
        code = run_cli([
            "degree-fractions", "--alpha", "0.5", "--n", "60", "--reps", "2",
            "--seed", "3", "--source", "stable", "--out", str(out),
        ])
        assert code == 0
        header, rows = read_csv(out / "fractions_alpha0p5_redraw_stable.csv")
        assert len(rows) == 2


class TestTailCompare:
    def test_contract(self, tmp_path):
        out = tmp_path / "tail"
        code = run_cli([
            "tail-compare", "--alpha", "0.5", "--n", "100000", "--seed", "2",
            "--out", str(out),
        ])
        assert code == 0
        header, rows = read_csv(out / "tailccdf_alpha0p5.csv")
        assert header == ["w", "ccdf_pareto", "ccdf_stable", "alpha"]
        ccdf_p = [float(r[1]) for r in rows]
        ccdf_s = [float(r[2]) for r in rows]
        assert all(x >= y for x, y in zip(ccdf_p, ccdf_p[1:]))
        assert all(x >= y for x, y in zip(ccdf_s, ccdf_s[1:]))
        assert ccdf_p[0] == pytest.approx(1.0, abs=1e-9)  # support starts at w = 1

    def test_small_sample_rejected(self, tmp_path):
        code = run_cli(["tail-compare", "--n", "1000", "--out", str(tmp_path / "x")])
        assert code == 2


class TestAnnealedCurveCommand:
    def test_curve_only(self, tmp_path):
        out = tmp_path / "curve"
        code = run_cli([
            "annealed-curve", "--alpha", "0.5", "--out", str(out),
            "--a-min", "0.5", "--a-max", "5", "--points", "6", "--tol", "1e-6",
        ])
        assert code == 0
        header, rows = read_csv(out / "curve_alpha0p5.csv")
        assert len(rows) == 6
        values = [float(r[1]) for r in rows]
        errors = [float(r[3]) for r in rows]
        assert all(v <= 1.0 + e for v, e in zip(values, errors))


class TestExitCodes:
    def test_validation_error(self, tmp_path):
        assert run_cli(["avg-clustering", "--alpha", "1.5", "--out", str(tmp_path)]) == 2
        assert run_cli(["avg-clustering", "--n", "1", "--out", str(tmp_path)]) == 2
        assert run_cli(["avg-clustering", "--reps", "0", "--out", str(tmp_path)]) == 2

    def test_tol_out_of_range(self, tmp_path):
        code = run_cli(["annealed-curve", "--tol", "1e-14", "--out", str(tmp_path / "q")])
        assert code == 2

    def test_quadrature_failure_exit_code(self, tmp_path, monkeypatch):
        def boom(manifest, **kwargs):
            raise QuadratureError("no convergence", best_estimate=0.4, error_estimate=1e-2)

        monkeypatch.setattr(cli, "run_annealed_curve", boom)
        assert run_cli(["annealed-curve", "--out", str(tmp_path)]) == 3


def test_preset_expands_combinations(tmp_path, monkeypatch):
    calls = []

    def record(manifest):
        calls.append((manifest.alpha, tuple(manifest.n_values)))
        return {}

    monkeypatch.setattr(cli, "run_clustering_function", record)
    assert run_cli(["clustering-function", "--preset", "paper", "--out", str(tmp_path)]) == 0
    assert len(calls) == 9
    assert (0.3, (100,)) in calls and (0.7, (10000,)) in calls
