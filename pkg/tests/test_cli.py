"""End-to-end CLI behavior via subprocess: output modes and exit codes."""

import json
import subprocess
import sys

import pytest


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "spdim", *args],
        capture_output=True,
        text=True,
        check=False,
        timeout=300,
    )


def test_dim_plain():
    result = run_cli("dim", "--p", "5", "--g", "4", "--c", "0", "--eps", "0")
    assert result.returncode == 0
    assert result.stdout.strip() == "42"


def test_dim_rank1():
    result = run_cli("dim", "--p", "5", "--g", "1", "--c", "0", "--eps", "0")
    assert result.returncode == 0
    assert result.stdout.strip() == "2"


def test_dim_json_uses_decimal_strings():
    result = run_cli("dim", "--p", "7", "--g", "3", "--c", "0", "--eps", "0",
                     "--method", "formula", "--format", "json")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["dim"] == "84"


def test_dim_rejects_composite_p():
    result = run_cli("dim", "--p", "4", "--g", "2", "--c", "0", "--eps", "0")
    assert result.returncode == 2
    assert "odd prime" in result.stderr


def test_dim_rejects_bad_c():
    result = run_cli("dim", "--p", "5", "--g", "2", "--c", "3", "--eps", "0")
    assert result.returncode == 2


def test_colorings_count():
    result = run_cli("colorings", "--p", "7", "--g", "2", "--c", "0",
                     "--eps", "0", "--count")
    assert result.returncode == 0
    assert result.stdout.strip() == "14"


def test_colorings_count_empty_type():
    result = run_cli("colorings", "--p", "5", "--g", "1", "--c", "1",
                     "--eps", "1", "--count")
    assert result.returncode == 0
    assert result.stdout.strip() == "0"


def test_colorings_list_json_lines():
    result = run_cli("colorings", "--p", "5", "--g", "3", "--c", "0",
                     "--eps", "1", "--list", "--format", "json")
    assert result.returncode == 0
    records = [json.loads(line) for line in result.stdout.splitlines() if line]
    assert records == [
        {"p": 5, "g": 3, "c": 0, "a": [1, 1, 1], "b": [0, 0, 0], "t": [2]}
    ]


def test_colorings_list_csv():
    result = run_cli("colorings", "--p", "5", "--g", "1", "--c", "0",
                     "--eps", "0", "--list", "--format", "csv")
    assert result.returncode == 0
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "a_1,b_1,eps,n_1"
    assert lines[1:] == ["0,0,0,1", "0,1,0,-1"]


def test_colorings_list_cap():
    result = run_cli("colorings", "--p", "11", "--g", "3", "--c", "0",
                     "--eps", "0", "--list", "--max-list", "10")
    assert result.returncode == 4


def test_character_plain():
    result = run_cli("character", "--p", "5", "--g", "3", "--c", "0", "--eps", "1")
    assert result.returncode == 0
    assert "weight (0, 0, 0) mult 1" in result.stdout
    assert "highest weight (omega-coeffs): [0, 0, 0]" in result.stdout


def test_character_empty_module():
    result = run_cli("character", "--p", "5", "--g", "2", "--c", "0", "--eps", "1")
    assert result.returncode == 0
    assert "empty module" in result.stdout


def test_character_reduced_json():
    result = run_cli("character", "--p", "5", "--g", "1", "--c", "0",
                     "--eps", "0", "--reduced", "--format", "json")
    payload = json.loads(result.stdout)
    assert payload["modulus"] == 4
    assert payload["entries"] == [
        {"weight": [1], "mult": "1"}, {"weight": [3], "mult": "1"},
    ]


def test_verify_jantzen_passes():
    result = run_cli("verify", "--suite", "jantzen", "--pmax", "13")
    assert result.returncode == 0
    assert "checks passed" in result.stdout


def test_verify_oracle_json():
    result = run_cli("verify", "--suite", "oracle", "--pmax", "7",
                     "--gmax", "3", "--format", "json")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["passed"] is True
    assert payload["failed"] == 0
    assert payload["total"] == 5 * 3  # (d=2)+(d=3) c-values times 3 ranks


def test_verify_lemmas_small():
    result = run_cli("verify", "--suite", "lemmas", "--pmax", "7", "--gmax", "3")
    assert result.returncode == 0


def test_verify_alcove():
    result = run_cli("verify", "--suite", "alcove", "--pmax", "7")
    assert result.returncode == 0


def test_table_rank3():
    result = run_cli("table", "--g", "3", "--pmax", "5")
    assert result.returncode == 0
    lines = [ln for ln in result.stdout.splitlines() if ln.strip()]
    assert len(lines) == 4
    assert "case   I" in lines[0] and "dim=14" in lines[0]


def test_table_rank2_skips_missing_weights():
    result = run_cli("table", "--g", "2", "--pmax", "5", "--format", "csv")
    assert result.returncode == 0
    rows = [ln for ln in result.stdout.strip().splitlines()[1:] if ln]
    assert len(rows) == 3


def test_table_rank4_includes_42():
    result = run_cli("table", "--g", "4", "--pmax", "5", "--format", "json")
    payload = json.loads(result.stdout)
    dims = [row["dim"] for row in payload["rows"]]
    assert "42" in dims


def test_fit_rank1():
    result = run_cli("fit", "--g", "1", "--c", "0", "--eps", "0",
                     "--format", "json")
    payload = json.loads(result.stdout)
    assert payload["polynomial"]["coeffs"] == [["-1", "2"], ["1", "2"]]


def test_fit_rank2_matches_tabulated():
    result = run_cli("fit", "--g", "2", "--c", "0", "--eps", "0",
                     "--format", "json")
    payload = json.loads(result.stdout)
    assert payload["tabulated_diff"] == []
    assert payload["degree"] == 3


def test_fit_insufficient_points():
    result = run_cli("fit", "--g", "3", "--c", "0", "--eps", "0",
                     "--primes", "5", "7", "11")
    assert result.returncode == 2


def test_dim_formula_precision_exit_code():
    result = run_cli("dim", "--p", "13", "--g", "5", "--c", "2", "--eps", "0",
                     "--method", "formula", "--precision-bits", "8")
    assert result.returncode == 3
    assert "bits" in result.stderr


def test_dim_polynomial_method():
    result = run_cli("dim", "--p", "7", "--g", "3", "--c", "2", "--eps", "1",
                     "--method", "polynomial")
    assert result.returncode == 0
    result2 = run_cli("dim", "--p", "7", "--g", "3", "--c", "2", "--eps", "1")
    assert result.stdout == result2.stdout


def test_deterministic_output():
    args = ("character", "--p", "7", "--g", "2", "--c", "1", "--eps", "0",
            "--format", "json")
    first = run_cli(*args)
    second = run_cli(*args)
    assert first.stdout == second.stdout
    assert first.returncode == second.returncode == 0


def test_output_file(tmp_path):
    target = tmp_path / "out.json"
    result = run_cli("dim", "--p", "5", "--g", "2", "--c", "1", "--eps", "0",
                     "--format", "json", "--output", str(target))
    assert result.returncode == 0
    assert json.loads(target.read_text())["dim"] == "4"
