import json
import os

import numpy as np
import pytest

from exposure_lab import cli, onset
from exposure_lab.sampling import generator, random_density, random_hermitian

SX = np.array([[0, 1], [1, 0]], complex)
SZ = np.diag([1.0, -1.0]).astype(complex)


def read(path):
    with open(path, "rb") as fh:
        return fh.read()


class TestScanQubit:
    def test_header_and_exit_code(self, tmp_path, capsys):
        out = tmp_path / "q.csv"
        assert cli.run(["scan-qubit", "--n", "2", "--grid", "15", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "delta,alpha2,exposure,renyi,valid"
        assert len(lines) == 1 + 15 * 15
        assert "scan-qubit" in capsys.readouterr().out

    def test_invalid_cells_empty(self, tmp_path):
        out = tmp_path / "q.csv"
        cli.run(["scan-qubit", "--grid", "11", "--out", str(out)])
        rows = [l.split(",") for l in out.read_text().splitlines()[1:]]
        invalid = [r for r in rows if r[4] == "false"]
        assert invalid and all(r[2] == "" and r[3] == "" for r in invalid)

    def test_n_one_is_usage_error(self, tmp_path, capsys):
        out = tmp_path / "q.csv"
        code = cli.run(["scan-qubit", "--n", "1", "--out", str(out)])
        assert code == 1
        assert "exceed 1" in capsys.readouterr().err
        assert not out.exists()

    def test_csv_roundtrip_17_digits(self, tmp_path):
        out = tmp_path / "q.csv"
        cli.run(["scan-qubit", "--grid", "9", "--out", str(out)])
        lines = out.read_text().splitlines()
        for line in lines[1:3]:
            delta, alpha2, exposure, _, valid = line.split(",")
            if valid == "true":
                # parse-back reproduces the float bit-for-bit
                assert format(float(exposure), ".17g") == exposure


class TestScanQutrit:
    def test_negative_region_present(self, tmp_path):
        out = tmp_path / "qt.csv"
        code = cli.run(
            ["scan-qutrit", "--op", "SySz+SzSy", "--az", "0", "--grid", "31",
             "--out", str(out)]
        )
        assert code == 0
        rows = [l.split(",") for l in out.read_text().splitlines()[1:]]
        vals = [float(r[2]) for r in rows if r[4] == "true"]
        assert min(vals) < -1e-6

    def test_bad_operator_is_invalid_input(self, tmp_path, capsys):
        code = cli.run(["scan-qutrit", "--op", "SxSy", "--out", str(tmp_path / "x.csv")])
        assert code == 2


class TestUdwCommands:
    def test_udw_evolve_smoke(self, tmp_path):
        out = tmp_path / "udw.csv"
        code = cli.run(
            ["udw-evolve", "--delta", "0.5", "--alpha2", "0.2", "--tmax", "1",
             "--steps", "21", "--out", str(out)]
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0].startswith("t,h_a,h_b,")
        assert len(lines) == 22

    def test_udw_evolve_renyi_index(self, tmp_path):
        out = tmp_path / "udw2.csv"
        assert cli.run(
            ["udw-evolve", "--delta", "0.6", "--alpha2", "0.1", "--n", "2",
             "--steps", "5", "--out", str(out)]
        ) == 0

    def test_udw_verify_small(self, tmp_path):
        out = tmp_path / "v.csv"
        code = cli.run(
            ["udw-verify", "--grid", "8", "--fock-points", "2", "--fock-levels", "24",
             "--seed", "3", "--out", str(out)]
        )
        assert code == 0
        rows = [l.split(",") for l in out.read_text().splitlines()[1:]]
        assert all(r[-1] == "true" for r in rows)


class TestOnsetReport:
    def _write_inputs(self, tmp_path, rng):
        paths = {}
        rho_a = random_density(rng, 3)
        rho_b = np.diag([1.0, 0.0]).astype(complex)
        op_a = random_hermitian(rng, 3)
        op_b = SX
        for name, mat in [
            ("state-a", rho_a), ("state-b", rho_b), ("op-a", op_a), ("op-b", op_b)
        ]:
            p = tmp_path / f"{name}.json"
            cli.save_matrix(mat, str(p))
            paths[name] = str(p)
        return paths, rho_a, rho_b, op_a, op_b

    def test_report_matches_library(self, tmp_path, rng):
        paths, rho_a, rho_b, op_a, op_b = self._write_inputs(tmp_path, rng)
        out = tmp_path / "report.json"
        code = cli.run(
            ["onset-report", "--state-a", paths["state-a"], "--state-b", paths["state-b"],
             "--op-a", paths["op-a"], "--op-b", paths["op-b"], "--n", "2",
             "--format", "json", "--out", str(out)]
        )
        assert code == 0
        env = json.loads(out.read_text())
        assert env["schema_version"] == "1"
        row = dict(zip(env["columns"], env["rows"][0]))
        rep = onset.onset_report(rho_a, rho_b, onset.ProductHamiltonian(op_a, op_b), 2.0)
        assert abs(row["exposure_a"] - rep.exposure_a) < 1e-15
        assert abs(row["delta_coefficient"] - rep.delta_coefficient) < 1e-15

    def test_invalid_state_exits_2(self, tmp_path, rng):
        paths, *_ = self._write_inputs(tmp_path, rng)
        bad = tmp_path / "bad.json"
        cli.save_matrix(np.diag([1.5, -0.5]).astype(complex), str(bad))
        code = cli.run(
            ["onset-report", "--state-a", str(bad), "--state-b", paths["state-b"],
             "--op-a", paths["op-a"], "--op-b", paths["op-b"], "--out",
             str(tmp_path / "r.csv")]
        )
        assert code == 2

    def test_missing_file_exits_3(self, tmp_path):
        code = cli.run(
            ["onset-report", "--state-a", "/nonexistent.json", "--state-b", "/n.json",
             "--op-a", "/n.json", "--op-b", "/n.json", "--out", str(tmp_path / "r.csv")]
        )
        assert code == 3


class TestVerifyCommands:
    def test_determinism(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        argv = ["verify", "free-hamiltonian", "--trials", "20", "--seed", "7"]
        assert cli.run(argv + ["--out", str(a)]) == 0
        assert cli.run(argv + ["--out", str(b)]) == 0
        assert read(a) == read(b)

    def test_different_seed_changes_rows(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        cli.run(["verify", "tensor-extension", "--trials", "5", "--seed", "1", "--out", str(a)])
        cli.run(["verify", "tensor-extension", "--trials", "5", "--seed", "2", "--out", str(b)])
        assert read(a) != read(b)

    @pytest.mark.parametrize(
        "check", ["first-derivative", "durability-positivity", "tensor-extension"]
    )
    def test_checks_pass(self, tmp_path, check):
        out = tmp_path / "v.csv"
        assert cli.run(["verify", check, "--trials", "10", "--seed", "11", "--out", str(out)]) == 0
        rows = out.read_text().splitlines()[1:]
        assert all(r.endswith("true") for r in rows)

    def test_complementary_symmetry(self, tmp_path):
        out = tmp_path / "v.csv"
        assert cli.run(
            ["verify", "complementary-symmetry", "--trials", "3", "--seed", "5",
             "--out", str(out)]
        ) == 0

    def test_impossible_tolerance_fails_with_exit_2(self, tmp_path):
        out = tmp_path / "v.csv"
        code = cli.run(
            ["verify", "tensor-extension", "--trials", "3", "--seed", "1",
             "--tol", "1e-30", "--out", str(out)]
        )
        assert code == 2
        assert out.exists()  # full results still written for inspection


class TestSpectrumCommand:
    def test_worked_case(self, tmp_path):
        out = tmp_path / "s.csv"
        assert cli.run(["spectrum", "--purities", "1,0.38,0.16", "--out", str(out)]) == 0
        header, row = out.read_text().splitlines()
        assert header == "lambda_0,lambda_1,lambda_2"
        vals = [float(x) for x in row.split(",")]
        assert np.abs(np.array(vals) - [0.5, 0.3, 0.2]).max() < 1e-10

    def test_inconsistent_exits_2(self, tmp_path):
        assert cli.run(["spectrum", "--purities", "1,2", "--out", str(tmp_path / "s.csv")]) == 2


class TestDivergenceDemo:
    def test_table_shape(self, tmp_path):
        out = tmp_path / "d.csv"
        assert cli.run(
            ["divergence-demo", "--points", "11", "--eps", "1e-3,1e-4", "--out", str(out)]
        ) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "lambda_min,eps,raw,regularized"
        assert len(lines) == 1 + 11 * 2

    def test_atest_operator(self, tmp_path):
        out = tmp_path / "d.csv"
        assert cli.run(
            ["divergence-demo", "--points", "5", "--op", "atest", "--out", str(out)]
        ) == 0


class TestIsocurveCommands:
    def test_isocurve(self, tmp_path):
        out = tmp_path / "iso.csv"
        assert cli.run(["isocurve", "--h2", "0.4", "--grid", "201", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "delta,alpha2,exposure,renyi"
        assert len(lines) > 10

    def test_extremize(self, tmp_path):
        out = tmp_path / "ext.csv"
        assert cli.run(["extremize", "--h2", "0.4", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "kind,delta,alpha2,exposure,renyi"
        kinds = [l.split(",")[0] for l in lines[1:]]
        assert kinds == ["min", "max"]

    def test_unattainable_target_exits_2(self, tmp_path):
        assert cli.run(["extremize", "--h2", "0.75", "--out", str(tmp_path / "e.csv")]) == 2


class TestPlumbing:
    def test_unknown_flag_exits_1(self, capsys):
        assert cli.run(["scan-qubit", "--bogus"]) == 1

    def test_unknown_command_exits_1(self):
        assert cli.run(["frobnicate"]) == 1

    def test_unwritable_path_exits_3_without_partial_file(self, tmp_path):
        target = tmp_path / "no-such-dir" / "x.csv"
        code = cli.run(["spectrum", "--purities", "1,0.5", "--out", str(target)])
        assert code == 3
        assert not target.exists()

    def test_json_envelope(self, tmp_path):
        out = tmp_path / "q.json"
        argv = ["scan-qubit", "--grid", "5", "--format", "json", "--out", str(out)]
        assert cli.run(argv) == 0
        env = json.loads(out.read_text())
        assert env["schema_version"] == "1"
        assert env["command"] == argv
        assert env["columns"][0] == "delta"
        assert len(env["rows"]) == 25
        assert any(r[2] is None for r in env["rows"])  # invalid cells are null

    def test_threads_env_var(self, tmp_path, monkeypatch):
        ref, thr = tmp_path / "a.csv", tmp_path / "b.csv"
        cli.run(["scan-qubit", "--grid", "13", "--out", str(ref)])
        monkeypatch.setenv("EXPOSURE_LAB_THREADS", "4")
        cli.run(["scan-qubit", "--grid", "13", "--out", str(thr)])
        assert read(ref) == read(thr)

    def test_bad_threads_env_var(self, tmp_path, monkeypatch):
        monkeypatch.setenv("EXPOSURE_LAB_THREADS", "many")
        assert cli.run(["scan-qubit", "--grid", "5", "--out", str(tmp_path / "x.csv")]) == 1

    def test_matrix_file_formats(self, tmp_path):
        # plain reals and [re, im] pairs are both accepted
        p = tmp_path / "m.json"
        p.write_text('{"matrix": [[0.5, [0, 0.1]], [[0, -0.1], 0.5]]}')
        m = cli.load_matrix(str(p))
        assert np.allclose(m, np.array([[0.5, 0.1j], [-0.1j, 0.5]]))

    def test_lf_line_endings(self, tmp_path):
        out = tmp_path / "q.csv"
        cli.run(["scan-qubit", "--grid", "5", "--out", str(out)])
        raw = read(out)
        assert b"\r" not in raw
        assert raw.endswith(b"\n")
