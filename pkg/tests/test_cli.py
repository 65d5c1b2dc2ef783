"""Command-line interface: outputs, formats, and the exit-code contract."""

import csv
import io
import json
from fractions import Fraction as F
from pathlib import Path

import jsonschema
import pytest

from lucascalc.cli import main

SCHEMA = json.loads((Path(__file__).parent.parent / "docs" / "report.schema.json").read_text())


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSeq:
    def test_fibonacci_plain(self, capsys):
        code, out, _ = run_cli(capsys, "seq", "--s", "1", "--t", "1", "--n", "6")
        assert code == 0
        values = [float(line.split("\t")[1]) for line in out.strip().splitlines()]
        assert values == [0, 1, 1, 2, 3, 5, 8]

    def test_mersenne_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "seq", "--s", "3", "--t", "-2", "--n", "6", "--format", "json"
        )
        assert code == 0
        rows = json.loads(out)
        assert [row["value"] for row in rows] == [0, 1, 3, 7, 15, 31, 63]

    def test_exact_rational_inputs(self, capsys):
        code, out, _ = run_cli(
            capsys, "seq", "--s", "1/2", "--t", "1", "--n", "4", "--exact", "--format", "json"
        )
        assert code == 0
        rows = json.loads(out)
        assert [F(row["value"]) for row in rows] == [F(0), F(1), F(1, 2), F(5, 4), F(9, 8)]

    def test_companion(self, capsys):
        code, out, _ = run_cli(
            capsys, "seq", "--s", "1", "--t", "1", "--n", "5", "--companion", "--format", "json"
        )
        assert [row["value"] for row in json.loads(out)] == [2, 1, 3, 4, 7, 11]

    def test_zero_parameter_exits_3(self, capsys):
        code, _, err = run_cli(capsys, "seq", "--s", "0", "--t", "1", "--n", "3")
        assert code == 3
        assert "nonzero" in err

    def test_parse_failure_exits_2(self, capsys):
        code, _, _ = run_cli(capsys, "seq", "--s", "abc", "--t", "1", "--n", "3")
        assert code == 2


class TestEval:
    def test_cos_at_origin(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "--fn", "cos", "--s", "1", "--t", "1", "--u", "1", "--x", "0",
            "--format", "json",
        )
        assert code == 0
        record = json.loads(out)
        assert record["value"] == 1.0
        assert record["termsUsed"] >= 1

    def test_exp_against_exact_oracle(self, capsys):
        from lucascalc import lucastorial, make_params

        total = sum(F(1) / lucastorial(n, make_params(F(1), F(1))) for n in range(51))
        code, out, _ = run_cli(
            capsys, "eval", "--fn", "exp", "--s", "1", "--t", "1", "--u", "1", "--x", "1",
            "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["value"] == pytest.approx(float(total), rel=1e-12)

    def test_pole_exits_3(self, capsys):
        code, _, err = run_cli(
            capsys, "eval", "--fn", "cot", "--s", "1", "--t", "1", "--u", "1", "--x", "0"
        )
        assert code == 3

    def test_divergence_exits_3(self, capsys):
        code, _, _ = run_cli(
            capsys, "eval", "--fn", "exp", "--s", "1", "--t", "1", "--u", "4", "--x", "2"
        )
        assert code == 3


class TestTable:
    def test_grid_count(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "--fn", "sin", "--s", "1", "--t", "1", "--u", "1",
            "--from", "0", "--to", "1", "--step", "0.1", "--format", "json",
        )
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 11
        assert rows[0]["x"] == 0.0 and rows[0]["value"] == 0.0

    def test_divergent_rows_are_flagged_null(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "--fn", "exp", "--s", "1", "--t", "1", "--u", "4",
            "--from", "0", "--to", "2", "--step", "1", "--format", "json",
        )
        assert code == 0
        rows = json.loads(out)
        assert rows[0]["value"] == 1.0 and rows[0]["diverged"] is False
        assert rows[-1]["value"] is None and rows[-1]["diverged"] is True

    def test_csv_and_json_carry_identical_data(self, capsys):
        args = ("table", "--fn", "cos", "--s", "1", "--t", "1", "--u", "1/2",
                "--from", "0", "--to", "0.5", "--step", "0.25")
        code, json_out, _ = run_cli(capsys, *args, "--format", "json")
        assert code == 0
        code, csv_out, _ = run_cli(capsys, *args, "--format", "csv")
        assert code == 0
        json_rows = json.loads(json_out)
        csv_rows = list(csv.DictReader(io.StringIO(csv_out)))
        assert len(json_rows) == len(csv_rows) == 3
        for jrow, crow in zip(json_rows, csv_rows):
            assert float(crow["x"]) == jrow["x"]
            assert float(crow["value"]) == pytest.approx(jrow["value"], rel=1e-15)

    def test_bad_range_exits_2(self, capsys):
        code, _, _ = run_cli(
            capsys, "table", "--fn", "sin", "--s", "1", "--t", "1", "--u", "1",
            "--from", "1", "--to", "0", "--step", "0.1",
        )
        assert code == 2


class TestVerify:
    def test_single_group_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "pascal-1", "--trials", "2")
        assert code == 0
        assert "PASS pascal-1" in out

    def test_unknown_suite_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--suite", "nosuch")
        assert code == 2
        assert "nosuch" in err

    def test_json_report_matches_schema(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "euler,pascal", "--trials", "2", "--format", "json"
        )
        assert code == 0
        report = json.loads(out)
        jsonschema.validate(report, SCHEMA)
        assert report["status"] == "pass"
        assert {r["id"] for r in report["results"]} == {"euler-i", "euler-neg", "pascal-1", "pascal-2"}

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "pascal", "--trials", "2", "--format", "csv"
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [row["status"] for row in rows] == ["pass", "pass"]


class TestPiU:
    def test_fibonacci_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "piu", "--s", "1", "--t", "1", "--u", "1", "--format", "json"
        )
        assert code == 0
        record = json.loads(out)
        assert 1.5 < record["piU"] < 1.6
        assert record["residual"] < 1e-10

    def test_no_root_exits_4(self, capsys):
        code, _, err = run_cli(capsys, "piu", "--s", "1", "--t", "1", "--u", "3")
        assert code == 4

    def test_residual_always_reported(self, capsys):
        code, out, _ = run_cli(
            capsys, "piu", "--s", "2", "--t", "1", "--u", "1", "--format", "json"
        )
        assert code == 0
        assert "residual" in json.loads(out)


class TestIntegrate:
    def test_cubic(self, capsys):
        code, out, _ = run_cli(
            capsys, "integrate", "--poly", "0,0,0,1", "--s", "1", "--t", "1",
            "--a", "0", "--b", "1", "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["value"] == pytest.approx(1 / 3, rel=1e-10)

    def test_empty_interval(self, capsys):
        code, out, _ = run_cli(
            capsys, "integrate", "--poly", "1,2", "--s", "1", "--t", "1",
            "--a", "0.5", "--b", "0.5", "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["value"] == 0.0

    def test_non_contracting_exits_3(self, capsys):
        code, _, _ = run_cli(
            capsys, "integrate", "--poly", "0,1", "--s", "1", "--t", "-1", "--a", "0", "--b", "1"
        )
        assert code == 3

    def test_bad_poly_exits_2(self, capsys):
        code, _, _ = run_cli(
            capsys, "integrate", "--poly", "1,,x", "--s", "1", "--t", "1", "--a", "0", "--b", "1"
        )
        assert code == 2
