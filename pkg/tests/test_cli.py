import json
import math

import pytest

from twistspec import cli


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSolve:
    def test_symmetric_gaussian_record(self, capsys):
        code, out, _ = run(["solve", "--measure", "gaussian", "--n", "1",
                            "--mass", "0.5", "--split", "0.5"], capsys)
        assert code == 0
        header, row = out.strip().splitlines()
        rec = dict(zip(header.split(","), row.split(",")))
        assert float(rec["c"]) == 0.0
        assert float(rec["lambda"]) == pytest.approx(3.2584169547794604, rel=1e-9)

    def test_power_two_unit_balls(self, capsys):
        code, out, _ = run(["solve", "--measure", "power", "--n", "3",
                            "--k", "0", "--L", "1", "--R", "1",
                            "--format", "json"], capsys)
        assert code == 0
        rec = json.loads(out)
        assert rec["lambda"] == pytest.approx(math.pi ** 2, rel=1e-6)
        assert rec["nu"] is None
        assert rec["alpha"] == -0.5

    def test_solver_order_guard_exit_code(self, capsys):
        code, _, err = run(["solve", "--measure", "power", "--n", "1",
                            "--k", "0.5", "--mass", "1.0", "--split", "0.5"],
                           capsys)
        assert code == 2
        assert "n+k>2" in err

    def test_missing_configuration(self, capsys):
        code, _, err = run(["solve", "--measure", "gaussian", "--n", "1"],
                           capsys)
        assert code == 2

    def test_infeasible_gaussian_split(self, capsys):
        code, _, err = run(["solve", "--measure", "gaussian", "--n", "1",
                            "--mass", "0.9", "--split", "0.6"], capsys)
        assert code == 2
        assert "infeasible" in err


class TestScan:
    def test_rows_and_minimum(self, tmp_path, capsys):
        out_file = tmp_path / "scan.csv"
        code, _, _ = run(["scan", "--measure", "gaussian", "--n", "1",
                          "--mass", "0.5", "--grid", "11",
                          "--out", str(out_file)], capsys)
        assert code == 0
        lines = out_file.read_text().strip().splitlines()
        header = lines[0].split(",")
        assert header == ["s", "L", "R", "lambda", "dlambda_ds_analytic",
                          "dlambda_ds_fd", "c", "du_left", "du_right"]
        assert len(lines) == 12
        rows = [dict(zip(header, ln.split(","))) for ln in lines[1:]]
        lams = [float(r["lambda"]) for r in rows]
        ss = [float(r["s"]) for r in rows]
        assert ss[lams.index(min(lams))] == pytest.approx(0.5)

    def test_too_small_grid_rejected(self, capsys):
        code, _, _ = run(["scan", "--measure", "gaussian", "--n", "1",
                          "--mass", "0.5", "--grid", "1"], capsys)
        assert code == 2

    def test_reruns_byte_identical(self, tmp_path, capsys):
        f1, f2 = tmp_path / "a.csv", tmp_path / "b.csv"
        for f in (f1, f2):
            code, _, _ = run(["scan", "--measure", "power", "--n", "2",
                              "--k", "1", "--mass", "1.5", "--grid", "7",
                              "--out", str(f)], capsys)
            assert code == 0
        assert f1.read_bytes() == f2.read_bytes()

    def test_json_round_trip(self, tmp_path, capsys):
        out_file = tmp_path / "scan.json"
        run(["scan", "--measure", "gaussian", "--n", "1", "--mass", "0.5",
             "--grid", "5", "--format", "json", "--out", str(out_file)],
            capsys)
        payload = json.loads(out_file.read_text())
        assert payload["measure"] == "gaussian"
        assert len(payload["rows"]) == 5
        again = json.loads(json.dumps(payload))
        assert again == payload


class TestVerify:
    def test_single_suite_passes(self, capsys):
        code, out, _ = run(["verify", "--suite", "turan"], capsys)
        assert code == 0
        assert "PASS" in out and "FAIL" not in out

    def test_injected_fault_fails_named_invariant(self, capsys):
        code, out, _ = run(["verify", "--suite", "turan",
                            "--inject-fault", "turan"], capsys)
        assert code != 0
        assert "FAIL" in out
        assert "turan.positivity_grid" in out

    def test_json_output_deterministic(self, tmp_path, capsys):
        f1, f2 = tmp_path / "v1.json", tmp_path / "v2.json"
        for f in (f1, f2):
            code, _, _ = run(["verify", "--suite", "recovery", "--seed", "5",
                              "--format", "json", "--out", str(f)], capsys)
            assert code == 0
        assert f1.read_bytes() == f2.read_bytes()
        payload = json.loads(f1.read_text())
        assert payload["all_passed"] is True

    def test_unknown_suite_rejected(self, capsys):
        with pytest.raises(SystemExit):
            cli.main(["verify", "--suite", "nope"])


class TestOracleCommand:
    def test_agreement(self, capsys):
        code, out, _ = run(["oracle", "--measure", "power", "--n", "2",
                            "--k", "1", "--mass", "1.0", "--split", "0.6",
                            "--format", "json"], capsys)
        assert code == 0
        rec = json.loads(out)
        assert rec["relative_gap"] <= 1e-3


class TestConfigFile:
    def test_file_supplies_values_flags_override(self, tmp_path, capsys):
        cfg = tmp_path / "run.cfg"
        cfg.write_text(
            "measure = gaussian\nn = 1\nmass = 0.5\nsplit = 0.4\n"
            "format = json\n# comment line\n")
        code, out, _ = run(["solve", "--config", str(cfg)], capsys)
        assert code == 0
        rec = json.loads(out)
        assert rec["mass_left"] == pytest.approx(0.2)

        code, out, _ = run(["solve", "--config", str(cfg), "--split", "0.5"],
                           capsys)
        rec = json.loads(out)
        assert rec["mass_left"] == pytest.approx(0.25)

    def test_bad_key_rejected(self, tmp_path, capsys):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("nonsense = 1\n")
        code, _, err = run(["solve", "--config", str(cfg)], capsys)
        assert code == 2
