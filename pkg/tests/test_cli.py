"""CLI contract tests: values, formats, exit codes, determinism."""

import csv
import io
import json
import subprocess
import sys

import pytest

import seshadri.cli as cli
from seshadri.oracle import HanScan


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_records(out):
    return [json.loads(line) for line in out.splitlines()]


class TestBoundsCommand:
    def test_floor_comparison_values(self, capsys):
        code, out, _ = run_cli(
            capsys, "bounds", "--k", "150", "--r", "10", "--surface", "hyp:150",
            "--digits", "2", "--format", "json",
        )
        assert code == 0
        (rec,) = json_records(out)
        by_name = {e["name"]: e for e in rec["entries"]}
        assert by_name["main"]["decimal"] == "3.72"
        assert by_name["szemberg-floor"]["exact"] == "3"

    def test_k35_r101_record(self, capsys):
        code, out, _ = run_cli(
            capsys, "bounds", "--k", "35", "--r", "101",
            "--surface", "custom:35,va", "--format", "json",
        )
        assert code == 0
        (rec,) = json_records(out)
        by_name = {e["name"]: e for e in rec["entries"]}
        assert by_name["main"]["decimal"] == "0.5858"
        assert by_name["biran-product"]["decimal"] == "0.5804"
        assert by_name["upper"]["decimal"] == "0.5886"
        assert by_name["harbourne"]["exact"] == "59/101"
        joined = " ".join(rec["notes"])
        assert "35/60" in joined and "59/101" in joined

    def test_two_six_annotation(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--k", "6", "--r", "2", "--format", "json")
        assert code == 0
        (rec,) = json_records(out)
        by_name = {e["name"]: e for e in rec["entries"]}
        assert by_name["main"]["exact"] == "3/2"
        assert any("multiplicity two" in n for n in rec["notes"])

    def test_multiple_k_values_stream(self, capsys):
        code, out, _ = run_cli(
            capsys, "bounds", "--k", "150,1050", "--r", "10", "--format", "json"
        )
        assert code == 0
        recs = json_records(out)
        assert [r["inputs"]["k"] for r in recs] == ["150", "1050"]

    def test_surface_k_conflict_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "bounds", "--k", "5", "--r", "2", "--surface", "p2")
        assert code == 1 and "conflicts" in err

    def test_malformed_surface_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "bounds", "--r", "2", "--surface", "weird:3")
        assert code == 1

    def test_invalid_surface_parameter_is_domain_error(self, capsys):
        # syntactically fine, mathematically invalid (degree must be >= 4)
        code, _, _ = run_cli(capsys, "bounds", "--r", "2", "--surface", "hyp:3")
        assert code == 2

    def test_exact_strings_round_trip(self, capsys):
        from seshadri.exact import Surd

        _, out, _ = run_cli(
            capsys, "bounds", "--k", "35", "--r", "101", "--format", "json"
        )
        (rec,) = json_records(out)
        for e in rec["entries"]:
            s = Surd.from_string(e["exact"])
            assert str(s) == e["exact"]

    def test_all_digits_notes(self, capsys):
        _, out, _ = run_cli(
            capsys, "bounds", "--k", "150", "--r", "10", "--all-digits", "--format", "json"
        )
        (rec,) = json_records(out)
        assert any("main at 2/3/4 digits: 3.72 / 3.721 / 3.7210" == n for n in rec["notes"])


class TestPellCommand:
    def test_k35(self, capsys):
        code, out, _ = run_cli(capsys, "pell", "--k", "35", "--format", "json")
        assert code == 0
        (rec,) = json_records(out)
        by_name = {e["name"]: e for e in rec["entries"]}
        assert by_name["single-point-bound"]["exact"] == "35/6"
        assert by_name["fundamental-p0"]["exact"] == "1"
        assert by_name["fundamental-q0"]["exact"] == "6"
        assert by_name["fsst-witness-n"]["exact"] == "6"

    def test_k2(self, capsys):
        code, out, _ = run_cli(capsys, "pell", "--k", "2", "--format", "json")
        (rec,) = json_records(out)
        by_name = {e["name"]: e for e in rec["entries"]}
        assert (by_name["fundamental-p0"]["exact"], by_name["fundamental-q0"]["exact"]) == ("2", "3")
        assert by_name["single-point-bound"]["exact"] == "4/3"

    def test_square_k_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "pell", "--k", "9")
        assert code == 2 and "trivial" in err


class TestSearchCommand:
    def test_conic_example(self, capsys):
        code, out, _ = run_cli(
            capsys, "search", "--k", "1", "--r", "5", "--d-max", "3", "--format", "json"
        )
        assert code == 0
        (rec,) = json_records(out)
        by_name = {e["name"]: e for e in rec["entries"]}
        assert by_name["minimum"]["exact"] == "2/5"
        assert by_name["witness-1"]["applicability"] == "d=2, m=(1,1,1,1,1)"
        assert by_name["witness-1"]["flags"] == ["unit-multiplicity"]

    def test_two_six_witness(self, capsys):
        code, out, _ = run_cli(
            capsys, "search", "--k", "6", "--r", "2", "--d-max", "2", "--format", "json"
        )
        (rec,) = json_records(out)
        by_name = {e["name"]: e for e in rec["entries"]}
        assert by_name["minimum"]["exact"] == "3/2"
        assert by_name["witness-1"]["flags"] == ["two-six"]

    def test_d_max_required(self, capsys):
        code, _, _ = run_cli(capsys, "search", "--k", "1", "--r", "5")
        assert code == 1

    def test_empty_box_exits_2(self, capsys):
        code, _, _ = run_cli(capsys, "search", "--k", "1", "--r", "0", "--d-max", "1")
        assert code == 2

    def test_caveat_note_present(self, capsys):
        _, out, _ = run_cli(
            capsys, "search", "--k", "1", "--r", "2", "--d-max", "1", "--format", "json"
        )
        (rec,) = json_records(out)
        assert any("candidate-level" in n for n in rec["notes"])


class TestVerifyCommand:
    def test_theorem_suite_passes(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "theorem", "--k-max", "10", "--r-max", "6",
            "--d-max", "3", "--m-max", "6", "--format", "json",
        )
        assert code == 0
        (rec,) = json_records(out)
        by_name = {e["name"]: e for e in rec["entries"]}
        assert by_name["violations"]["exact"] == "0"

    def test_han_suite_passes(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "han", "--s-max", "4", "--m-max", "6",
            "--format", "json",
        )
        assert code == 0
        (rec,) = json_records(out)
        names = [e["name"] for e in rec["entries"]]
        assert "equality-witness" in names

    def test_k3_suite_passes(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "k3", "--k-max", "10", "--r-max", "6",
            "--d-max", "3", "--format", "json",
        )
        assert code == 0
        (rec,) = json_records(out)
        by_name = {e["name"]: e for e in rec["entries"]}
        assert by_name["exclusion-failures"]["exact"] == "0"

    def test_counterexample_exits_3(self, capsys, monkeypatch):
        fake = HanScan(2, 2, 1, ((3, 1),), ())
        monkeypatch.setattr(cli, "verify_han_exhaustive", lambda s, m: fake)
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "han", "--s-max", "2", "--m-max", "2",
            "--format", "json",
        )
        assert code == 3
        (rec,) = json_records(out)
        assert any(e["name"] == "counterexample" for e in rec["entries"])


class TestThresholdCommand:
    def test_r10(self, capsys):
        code, out, _ = run_cli(
            capsys, "threshold", "--r", "10", "--k-cap", "10000", "--format", "json"
        )
        assert code == 0
        (rec,) = json_records(out)
        by_name = {e["name"]: e for e in rec["entries"]}
        assert by_name["threshold"]["exact"] == "6250"
        assert by_name["last-failure"]["exact"] == "6249"

    def test_cap_too_small_returns_none(self, capsys):
        code, out, _ = run_cli(
            capsys, "threshold", "--r", "10", "--k-cap", "100", "--format", "json"
        )
        assert code == 0
        (rec,) = json_records(out)
        by_name = {e["name"]: e for e in rec["entries"]}
        assert by_name["threshold"]["exact"] == "none"


class TestP2Table:
    def test_values_and_statuses(self, capsys):
        code, out, _ = run_cli(capsys, "p2-table", "--format", "json")
        assert code == 0
        (rec,) = json_records(out)
        by_name = {e["name"]: e for e in rec["entries"]}
        assert by_name["r=2"]["exact"] == "1/2"
        assert by_name["r=8"]["exact"] == "6/17"
        assert by_name["r=9"]["exact"] == "1/3"
        assert by_name["r=9"]["flags"] == ["proved-square"]
        assert any("misprint" in n for n in rec["notes"])


class TestFormatsAndDeterminism:
    def test_csv_column_order(self, capsys):
        _, out, _ = run_cli(capsys, "bounds", "--k", "6", "--r", "2", "--format", "csv")
        reader = csv.reader(io.StringIO(out))
        header = next(reader)
        assert header == cli.CSV_COLUMNS

    def test_env_var_sets_default_format(self, capsys, monkeypatch):
        monkeypatch.setenv("SESHADRI_FORMAT", "json")
        _, out, _ = run_cli(capsys, "pell", "--k", "2")
        json_records(out)  # parses cleanly

    def test_bad_env_format_is_usage_error(self, capsys, monkeypatch):
        monkeypatch.setenv("SESHADRI_FORMAT", "xml")
        code, _, _ = run_cli(capsys, "pell", "--k", "2")
        assert code == 1

    @pytest.mark.parametrize("fmt", ["text", "json", "csv"])
    def test_byte_identical_reruns(self, capsys, fmt):
        args = ("bounds", "--k", "35", "--r", "101", "--surface", "custom:35,va",
                "--format", fmt)
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2

    def test_text_is_same_record_as_json(self, capsys):
        # every exact value in the JSON record appears in the text rendering
        _, text_out, _ = run_cli(capsys, "bounds", "--k", "35", "--r", "101")
        _, json_out, _ = run_cli(capsys, "bounds", "--k", "35", "--r", "101", "--format", "json")
        (rec,) = json_records(json_out)
        for e in rec["entries"]:
            assert e["exact"] in text_out
        for n in rec["notes"]:
            assert n in text_out

    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "seshadri", "pell", "--k", "35"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert "35/6" in proc.stdout
