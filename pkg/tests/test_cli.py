import json
import os
import subprocess
import sys

import pytest

from antibracket.cli import SCHEMA, main


def run(tmp_path, *argv, name="report.json"):
    out = tmp_path / name
    code = main(list(argv) + ["--out", str(out)])
    return code, json.loads(out.read_text())


def strip_timing(report):
    for c in report["checks"]:
        c.pop("seconds")
    return report


def test_classical_jacobi_passes(tmp_path):
    code, report = run(tmp_path, "verify-jacobi", "classical", "--seed", "7", "--trials", "8")
    assert code == 0
    assert report["schema"] == SCHEMA and report["passed"]
    assert report["config"]["seed"] == 7


def test_even_cocycle_at_n2_passes(tmp_path):
    code, report = run(tmp_path, "verify-cocycle", "m2_4", "--n", "2", "--trials", "4")
    assert code == 0
    assert report["command"] == {"name": "verify-cocycle", "cocycle": "m2_4", "plan": None}
    assert report["config"]["n"] == 2


def test_mixed_bracket_with_even_term_fails_with_witness(tmp_path):
    code, report = run(tmp_path, "verify-jacobi", "mixed", "--with-even-term")
    assert code == 1
    failed = [c for c in report["checks"] if c["status"] == "fail"]
    assert failed
    assert "theta" in json.dumps(failed[0]["witness"])


def test_mixed_bracket_without_even_term_passes(tmp_path):
    code, _ = run(tmp_path, "verify-jacobi", "mixed")
    assert code == 0


def test_usage_errors_exit_2(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify-cocycle", "m2_9"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify-jacobi", "classical", "--order", "0"])
    assert exc.value.code == 2
    assert main(["verify-cocycle", "m2_3", "--plan", str(tmp_path / "missing.json")]) == 2


def test_report_is_deterministic(tmp_path):
    argv = ("verify-cocycle", "m2_1", "--trials", "4", "--seed", "3")
    _, a = run(tmp_path, *argv, name="a.json")
    _, b = run(tmp_path, *argv, name="b.json")
    assert json.dumps(strip_timing(a), sort_keys=True) == json.dumps(strip_timing(b), sort_keys=True)


def test_output_is_atomic(tmp_path):
    run(tmp_path, "verify-compactness")
    assert sorted(os.listdir(tmp_path)) == ["report.json"]


def test_check_names_are_unique(tmp_path):
    _, report = run(tmp_path, "verify-jacobi", "odd", "--trials", "4")
    names = [c["name"] for c in report["checks"]]
    assert len(names) == len(set(names))
    assert all(c["anchor"] for c in report["checks"])


def test_sampling_plan_file(tmp_path):
    plan = tmp_path / "plan.json"
    plan.write_text(json.dumps({"seed": 2, "trials": 2, "n": 1, "kind": "spline"}))
    code, report = run(tmp_path, "verify-cocycle", "m2_6", "--plan", str(plan))
    assert code == 0
    assert report["checks"][0]["details"]["plan"]["kind"] == "spline"


def test_prop2_reports_the_residual(tmp_path):
    code, report = run(tmp_path, "verify-prop2")
    assert code == 0
    assert report["checks"][0]["details"]["second_order_residual_F0_c1"] == "u*alpha + v*beta"


def test_module_entry_point_writes_stdout():
    out = subprocess.run(
        [sys.executable, "-m", "antibracket", "verify-compactness"], capture_output=True, text=True
    )
    assert out.returncode == 0
    assert json.loads(out.stdout)["passed"] is True
    assert "PASS" in out.stderr
