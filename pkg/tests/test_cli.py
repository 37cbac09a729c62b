"""The latticealg command line: exit codes, formats, determinism."""

import json
import subprocess
import sys

import pytest

import latticealg as la
from latticealg.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_ok(capsys):
    code, out, _ = run_cli(capsys, "verify", "builtin:upper2")
    assert code == 0
    assert "result: PASS" in out


def test_verify_failing_algebra(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"dim": 2, "tensor": [[0, 0, 0, -1]]}))
    code, out, _ = run_cli(capsys, "verify", str(path))
    assert code == 1
    assert "FAIL" in out


def test_unknown_builtin_is_input_error(capsys):
    code, _, err = run_cli(capsys, "verify", "builtin:nope")
    assert code == 2
    assert "unknown builtin" in err


def test_missing_file_is_input_error(capsys):
    code, _, err = run_cli(capsys, "verify", "/no/such/file.json")
    assert code == 2
    assert "error:" in err


def test_target_and_flag_conflict(capsys):
    code, _, err = run_cli(capsys, "verify", "builtin:upper2", "--builtin", "upper2")
    assert code == 2
    assert "either" in err


def test_no_target(capsys):
    code, _, err = run_cli(capsys, "verify")
    assert code == 2


def test_classify_grid_flag(capsys):
    code, out, _ = run_cli(capsys, "classify", "builtin:upper2", "--grid", "3")
    assert code == 0
    assert "(0, 1/3, 0)" in out


def test_classify_unknown_element(capsys):
    code, _, err = run_cli(capsys, "classify", "builtin:upper2", "--element", "zzz")
    assert code == 2
    assert "available" in err


def test_spectrum_json(capsys):
    code, out, _ = run_cli(
        capsys, "spectrum", "builtin:upper2", "--element", "a23", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    entry = payload["elements"]["a23"]
    assert entry["char_poly"] == [12, -16, 7, -1]
    assert {"root": 2, "multiplicity": 2} in entry["rational_roots"]
    assert entry["spectral_radius"] == 3


def test_center_json(capsys):
    code, out, _ = run_cli(capsys, "center", "builtin:upper2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["support"] == [0, 2]
    assert payload["complement_support"] == [1]
    x = payload["decomposition_demo"]
    assert len(x["x"]) == 3


def test_inner_gamma_flow(capsys):
    code, out, _ = run_cli(
        capsys,
        "inner",
        "builtin:noid3",
        "--family",
        "p1",
        "--family",
        "p2",
        "--gamma",
        "(0,0),(1,1)",
    )
    assert code == 0
    assert "distinct inner projections: 4" in out
    assert "Boolean laws" in out and "pass" in out
    assert "NOT inner" in out  # the z-mask


def test_inner_bad_family(capsys):
    code, _, err = run_cli(
        capsys, "inner", "builtin:upper2", "--family", "E11", "--family", "E11"
    )
    assert code == 2


def test_inner_bad_gamma_text(capsys):
    code, _, err = run_cli(
        capsys, "inner", "builtin:noid3", "--family", "p1", "--gamma", "garbage"
    )
    assert code == 2


def test_cap_flag_and_env(capsys, monkeypatch):
    # upper2-pair falls back to its four atoms as the family: |Λ|² = 16
    code, _, err = run_cli(capsys, "inner", "builtin:upper2-pair", "--cap", "9")
    assert code == 2
    assert "cap" in err
    monkeypatch.setenv("LATTICEALG_CAP", "9")
    code, _, err = run_cli(capsys, "inner", "builtin:upper2-pair")
    assert code == 2
    # an explicit flag beats the environment
    code, out, _ = run_cli(capsys, "inner", "builtin:upper2-pair", "--cap", "16")
    assert code == 0
    assert "distinct inner projections: 64" in out
    monkeypatch.setenv("LATTICEALG_CAP", "not-a-number")
    code, _, err = run_cli(capsys, "inner", "builtin:upper2-pair")
    assert code == 2


def test_report_runs_deterministically(capsys):
    outputs = []
    for _ in range(2):
        code, out, _ = run_cli(capsys, "report", "builtin:m3-reflection")
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]
    assert outputs[0].startswith("# Algebra report: m3-reflection")


def test_report_all_builtins(capsys):
    code, out, _ = run_cli(capsys, "report")
    assert code == 0
    for name in la.BUILTIN_NAMES:
        assert f"# Algebra report: {name}" in out


def test_markdown_format(capsys):
    code, out, _ = run_cli(capsys, "verify", "builtin:ck2", "--format", "markdown")
    assert code == 0
    assert out.startswith("# latticealg verify")


def test_console_script_entrypoint():
    proc = subprocess.run(
        [sys.executable, "-m", "latticealg.cli", "verify", "builtin:upper2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "result: PASS" in proc.stdout


def test_file_input_round_trip(tmp_path, capsys):
    alg = la.builtin("m3-reflection")
    path = tmp_path / "m3.json"
    la.save_algebra(alg, path)
    code, out, _ = run_cli(capsys, "classify", "--input", str(path), "--element", "p")
    assert code == 0
    assert "p = (0, 1, 0): OI no / BP yes" in out
