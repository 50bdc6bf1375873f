import json
import subprocess
import sys

import pytest

from bollobas.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


@pytest.fixture()
def layered4(tmp_path, capsys):
    code, obj = run_json(capsys, "construct", "layered-triples", "--n", "4")
    assert code == 0
    path = tmp_path / "layered4.json"
    path.write_text(json.dumps(obj["results"]["family"]))
    return str(path)


class TestVerify:
    def test_layered_family_passes(self, capsys, layered4):
        code, obj = run_json(capsys, "--input", layered4, "verify", "--mode", "bollobas")
        assert code == 0
        assert obj["results"]["valid"] is True
        assert obj["results"]["violation"] is None

    def test_adversarial_swap_reports_pair(self, capsys, tmp_path):
        bad = {"n": 4, "d": 3, "tuples": [[[1], [2], [3]], [[4], [2], [3]]]}
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(bad))
        code, obj = run_json(capsys, "--input", str(path), "verify", "--mode", "bollobas")
        assert code == 1
        assert obj["results"]["violation"] == [1, 2]

    def test_empty_family_vacuous(self, capsys, tmp_path):
        path = tmp_path / "empty.json"
        path.write_text(json.dumps({"n": 3, "d": 2, "tuples": []}))
        code, obj = run_json(capsys, "--input", str(path), "verify", "--mode", "skew")
        assert code == 0 and obj["results"]["valid"] is True


class TestSum:
    def test_conjecture_sum_of_layered6(self, capsys, tmp_path):
        code, obj = run_json(capsys, "construct", "layered-triples", "--n", "6")
        path = tmp_path / "f6.json"
        path.write_text(json.dumps(obj["results"]["family"]))
        code, obj = run_json(capsys, "--input", str(path), "sum", "--which", "conjecture")
        assert code == 0
        assert obj["results"]["value"] == "4"
        assert obj["results"]["bound"] == "9/2"
        assert obj["results"]["within_bound"] is True

    def test_skew_sum_within_unit(self, capsys, layered4):
        code, obj = run_json(capsys, "--input", layered4, "sum", "--which", "skew")
        assert code == 0
        assert obj["results"]["bound"] == "1"

    def test_pair_weighted_needs_d2(self, capsys, layered4):
        code = main(["--input", layered4, "sum", "--which", "pair_weighted"])
        assert code == 2


class TestConstruct:
    def test_layered6_has_141_tuples(self, capsys):
        code, obj = run_json(capsys, "construct", "layered-triples", "--n", "6")
        assert code == 0 and obj["results"]["m"] == 141

    def test_complete_uniform(self, capsys):
        code, obj = run_json(capsys, "construct", "complete-uniform", "--sizes", "1,1,1")
        assert code == 0 and obj["results"]["m"] == 6

    def test_random_skew_with_lift(self, capsys):
        code, obj = run_json(
            capsys,
            "--seed", "7",
            "construct", "random-skew", "--n", "6", "--d", "3", "--count", "5", "--lift",
        )
        assert code == 0
        assert obj["results"]["m"] == len(obj["results"]["subspace_family"]["entries"])

    def test_missing_flag_is_usage_error(self, capsys):
        assert main(["construct", "layered-triples"]) == 2


class TestSearch:
    def test_tight_triple(self, capsys):
        code, obj = run_json(
            capsys, "search", "--mode", "bollobas", "--n", "3", "--type", "1,1,1"
        )
        assert code == 0
        assert obj["results"]["max_size"] == 6 == obj["results"]["bound"]

    def test_skew_mode(self, capsys):
        code, obj = run_json(capsys, "search", "--mode", "skew", "--n", "4", "--type", "1,1")
        assert code == 0 and obj["results"]["max_size"] == 2


class TestSimulate:
    def test_skew_disjoint(self, capsys, layered4):
        code, obj = run_json(
            capsys,
            "--input", layered4, "--seed", "5",
            "simulate", "--mode", "skew", "--trials", "3000",
        )
        assert code == 0
        assert obj["results"]["max_simultaneous_hits"] <= 1
        assert obj["results"]["events_disjoint"] is True

    def test_d3_mode(self, capsys, layered4):
        code, obj = run_json(
            capsys,
            "--input", layered4, "--seed", "5",
            "simulate", "--mode", "d3", "--trials", "2000",
        )
        assert code == 0


class TestCertify:
    def test_auto_lift_and_pass(self, capsys, tmp_path):
        code, obj = run_json(capsys, "construct", "complete-uniform", "--sizes", "1,1,1")
        path = tmp_path / "c111.json"
        path.write_text(json.dumps(obj["results"]["family"]))
        code, obj = run_json(capsys, "--input", str(path), "--seed", "42", "certify")
        assert code == 0
        assert obj["results"]["verdict"] == "pass"
        assert obj["results"]["m"] == 6 == obj["results"]["size_bound"]

    def test_invalid_family_fails_with_diagnostics(self, capsys, tmp_path):
        bad = {"n": 4, "d": 2, "tuples": [[[1], [2]], [[3], [4]]]}
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(bad))
        code, obj = run_json(capsys, "--input", str(path), "certify")
        assert code == 1
        assert obj["results"]["verdict"] == "fail"
        assert obj["results"]["skew_ok"] is False


class TestBounds:
    def test_d3_table(self, capsys):
        code, obj = run_json(capsys, "bounds", "--n", "1..8", "--d", "3")
        assert code == 0
        rows = obj["results"]["rows"]
        assert [r["bound"] for r in rows] == ["2", "5/2", "3", "7/2", "4", "9/2", "5", "11/2"]


class TestErrorsAndDeterminism:
    def test_malformed_json_is_exit_2(self, capsys, tmp_path):
        path = tmp_path / "junk.json"
        path.write_text("{not json")
        assert main(["--input", str(path), "verify", "--mode", "skew"]) == 2

    def test_missing_input_is_exit_2(self, capsys):
        assert main(["verify", "--mode", "skew"]) == 2

    def test_byte_identical_reruns(self, capsys, layered4):
        invocations = [
            ["--input", layered4, "verify", "--mode", "bollobas"],
            ["--input", layered4, "sum", "--which", "conjecture"],
            ["--input", layered4, "--seed", "3", "simulate", "--mode", "skew", "--trials", "500"],
            ["--seed", "7", "construct", "random-skew", "--n", "5", "--d", "2", "--count", "4"],
            ["search", "--mode", "bollobas", "--n", "3", "--type", "2,1"],
            ["bounds", "--n", "1..4", "--d", "4"],
        ]
        for argv in invocations:
            first_code, first = run(capsys, *argv)
            second_code, second = run(capsys, *argv)
            assert first_code == second_code
            assert first == second

    def test_output_file(self, capsys, tmp_path, layered4):
        out = tmp_path / "report.json"
        code = main(["--input", layered4, "--output", str(out), "verify", "--mode", "skew"])
        assert code == 0
        obj = json.loads(out.read_text())
        assert obj["command"] == "verify"

    def test_mode_arity_mismatch_is_exit_2(self, capsys, tmp_path):
        pair = tmp_path / "pair.json"
        pair.write_text(json.dumps({"n": 2, "d": 2, "tuples": [[[1], [2]]]}))
        assert main(["--input", str(pair), "simulate", "--mode", "d3", "--trials", "10"]) == 2

    def test_certify_nonuniform_is_exit_2(self, capsys, tmp_path):
        fam = tmp_path / "nonuniform.json"
        fam.write_text(json.dumps({"n": 3, "d": 2, "tuples": [[[1], [2]], [[1], [2, 3]]]}))
        assert main(["--input", str(fam), "certify"]) == 2

    def test_search_type_too_large_is_exit_2(self, capsys):
        assert main(["search", "--mode", "skew", "--n", "2", "--type", "2,1"]) == 2

    def test_bad_range_is_exit_2(self, capsys):
        assert main(["bounds", "--n", "x..y", "--d", "3"]) == 2

    def test_stdin_input(self, capsys, monkeypatch):
        import io

        payload = json.dumps({"n": 2, "d": 2, "tuples": [[[1], [2]]]})
        monkeypatch.setattr("sys.stdin", io.StringIO(payload))
        code = main(["--input", "-", "verify", "--mode", "skew"])
        out = capsys.readouterr().out
        assert code == 0
        assert json.loads(out)["results"]["valid"] is True


class TestSubprocessPipeline:
    """Drive the module as a real subprocess, construct -> verify -> sum -> certify."""

    def run_cli(self, args, stdin=None):
        return subprocess.run(
            [sys.executable, "-m", "bollobas.cli", *args],
            input=stdin,
            capture_output=True,
            text=True,
            timeout=120,
        )

    def test_full_pipeline(self, tmp_path):
        proc = self.run_cli(["construct", "complete-uniform", "--sizes", "1,1,1"])
        assert proc.returncode == 0, proc.stderr
        family = json.dumps(json.loads(proc.stdout)["results"]["family"])
        fam_path = tmp_path / "fam.json"
        fam_path.write_text(family)

        proc = self.run_cli(["--input", str(fam_path), "verify", "--mode", "bollobas"])
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["results"]["valid"] is True
        assert "elapsed_ms=" in proc.stderr  # timing stays off stdout

        proc = self.run_cli(["--input", "-", "sum", "--which", "skew"], stdin=family)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["results"]["within_bound"] is True

        proc = self.run_cli(["--input", str(fam_path), "--seed", "42", "certify"])
        assert proc.returncode == 0
        results = json.loads(proc.stdout)["results"]
        assert results["verdict"] == "pass" and results["m"] == 6
