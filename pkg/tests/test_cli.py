import json
import subprocess
import sys

import pytest

from ssgenus4.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_field_command(capsys):
    code, out, _ = run_cli(capsys, "field", "--n", "11")
    assert code == 0
    assert json.loads(out) == {"n": 11, "modulus_hex": "0x805",
                               "primitive_hex": "0x2"}


def test_field_command_bad_modulus(capsys):
    code, _, err = run_cli(capsys, "field", "--n", "3", "--modulus", "0xF")
    assert code == 2
    assert "factors" in err


def test_field_roundtrip_through_file(tmp_path, capsys):
    cfg = tmp_path / "field.json"
    code, _, _ = run_cli(capsys, "field", "--n", "11", "--out", str(cfg))
    assert code == 0
    code, out, _ = run_cli(capsys, "classify", "--field", str(cfg),
                           "--f", "0x1", "--a", "0x5fa", "--b", "0x50e",
                           "--c", "0x0", "--d", "0x0")
    assert code == 0
    assert json.loads(out)["S"] == -256


def test_examples_command(capsys):
    code, out, _ = run_cli(capsys, "examples")
    assert code == 0
    assert out.count(" ok") == 4
    assert "MISMATCH" not in out


def test_examples_json(capsys):
    code, out, _ = run_cli(capsys, "examples", "--json")
    assert code == 0
    rows = json.loads(out)
    assert [r["got"] for r in rows] == [-256, 256, -128, 128]
    assert all(r["ok"] for r in rows)
    assert all(set(r) == {"curve", "expected", "got", "ok"} for r in rows)


def test_examples_wrong_modulus(capsys):
    # x^11 + x^9 + 1 is irreducible but is the wrong field realization
    code, out, _ = run_cli(capsys, "examples", "--modulus", "0xA01")
    assert code == 1
    assert "MISMATCH" in out


def test_classify_command(capsys):
    code, out, _ = run_cli(capsys, "classify", "--n", "3", "--f", "0x1",
                           "--a", "0x0", "--b", "0x0", "--c", "0x0",
                           "--d", "0x0")
    assert code == 0
    data = json.loads(out)
    assert data["S"] == 0
    assert data["w"] == 3
    assert data["consistent"] is True


def test_classify_f_zero_is_config_error(capsys):
    code, _, err = run_cli(capsys, "classify", "--n", "3", "--f", "0x0",
                           "--a", "0x0", "--b", "0x0", "--c", "0x0",
                           "--d", "0x0")
    assert code == 2
    assert "genus" in err


def test_classify_too_large_is_config_error(capsys):
    code, _, err = run_cli(capsys, "classify", "--n", "31", "--f", "0x1",
                           "--a", "0x0", "--b", "0x0", "--c", "0x0",
                           "--d", "0x0")
    assert code == 2
    assert "cap" in err


def test_scan_command(tmp_path, capsys):
    out_path = tmp_path / "n3.csv"
    code, out, err = run_cli(capsys, "scan", "--n", "3",
                             "--mode", "exhaustive", "--out", str(out_path),
                             "--format", "csv")
    assert code == 0
    assert "backend:" in err
    summary = json.loads(out)
    assert summary["curves_scanned"] == 7168
    assert summary["violations"] == []
    assert out_path.read_text().startswith("f,a,b,c,d,S,N,w,")


def test_scan_sample_command(tmp_path, capsys):
    out_path = tmp_path / "s.jsonl"
    code, out, _ = run_cli(capsys, "scan", "--n", "7", "--mode", "sample",
                           "--samples", "500", "--seed", "9",
                           "--workers", "2", "--out", str(out_path),
                           "--format", "jsonl")
    assert code == 0
    summary = json.loads(out)
    assert summary["seed"] == 9
    assert summary["curves_scanned"] == 1000
    assert len(out_path.read_text().strip().split("\n")) == 1000


def test_scan_exhaustive_guard(capsys):
    code, _, err = run_cli(capsys, "scan", "--n", "9", "--mode", "exhaustive")
    assert code == 2
    assert "force-large" in err or "allow_large" in err


def test_zeta_command(capsys):
    code, out, err = run_cli(capsys, "zeta", "--n", "3")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "multiset_label,a1,a1_over_sqrt2q,survives_serre"
    assert len(lines) == 65
    assert "candidate multiples" in err
    assert "[-4, -3, -2, -1, 0, 1, 2, 3, 4]" in err
    twelve_rows = [l for l in lines if ",12," in l or ",-12," in l]
    assert len(twelve_rows) == 4


def test_zeta_degree2(capsys):
    code, out, _ = run_cli(capsys, "zeta", "--n", "3", "--degree", "2")
    assert code == 0
    assert len(out.strip().split("\n")) == 4


def test_usage_error_exit_code():
    assert subprocess.run(
        [sys.executable, "-m", "ssgenus4.cli", "scan"],
        capture_output=True).returncode == 2


def test_entry_point_module():
    proc = subprocess.run(
        [sys.executable, "-m", "ssgenus4.cli", "field", "--n", "3"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["n"] == 3
