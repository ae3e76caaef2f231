import json
import subprocess
import sys

import pytest

from curvecount import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert err == ""
    return code, json.loads(out)


def test_grass_integer_text(capsys):
    code, out, err = run_cli(capsys, "grass", "integrate(sigma[1]^6) in G(2,5)")
    assert code == 0
    assert out == "5\n"
    assert err == ""


def test_grass_cycle_text(capsys):
    code, out, _ = run_cli(capsys, "grass", "sigma[1]*sigma[1] in G(2,4)")
    assert code == 0
    assert out == "sigma[2] + sigma[1,1]\n"


def test_grass_json_schema(capsys):
    code, payload = run_json(capsys, "grass", "--json", "integrate(c(6, sym(5, Sdual))) in G(2,5)")
    assert code == 0
    assert payload["query"] == "integrate(c(6, sym(5, Sdual))) in G(2,5)"
    assert payload["context"] == "G(2,5)"
    assert payload["result"] == {"kind": "integer", "value": 2875}
    assert isinstance(payload["timings_ms"], float)


def test_grass_json_cycle(capsys):
    code, payload = run_json(capsys, "grass", "--json", "sigma[1]*sigma[1] in G(2,4)")
    assert code == 0
    assert payload["result"] == {"kind": "cycle", "value": "sigma[2] + sigma[1,1]"}


def test_grass_results_are_stable(capsys):
    runs = []
    for _ in range(2):
        _, payload = run_json(capsys, "grass", "--json", "sigma[2]*sigma[1,1] in G(3,6)")
        payload.pop("timings_ms")
        runs.append(payload)
    assert runs[0] == runs[1]


def test_grass_syntax_error_exits_one(capsys):
    code, out, err = run_cli(capsys, "grass", "sigma[1")
    assert code == 1
    assert out == ""
    assert "syntax error" in err
    assert "column 8" in err


def test_grass_semantic_error_exits_one(capsys):
    code, _, err = run_cli(capsys, "grass", "zeta in G(2,4)")
    assert code == 1
    assert "evaluation error" in err


def test_count_lines_text(capsys):
    code, out, _ = run_cli(capsys, "count", "lines", "--ambient", "4", "--degrees", "5")
    assert code == 0
    assert "count:         2875" in out
    assert "calabi-yau:    yes" in out


def test_count_lines_json(capsys):
    code, payload = run_json(capsys, "count", "lines", "--json", "--ambient", "7", "--degrees", "2,2,2,2")
    assert code == 0
    assert payload["outcome"] == {"count": 512}
    assert payload["degrees"] == [2, 2, 2, 2]
    assert payload["moduli_dim"] == 12


def test_count_lines_family_json(capsys):
    code, payload = run_json(capsys, "count", "lines", "--json", "--ambient", "4", "--degrees", "3")
    assert code == 0
    assert payload["outcome"] == {"family_dimension": 2}
    assert payload["calabi_yau"] is False


def test_count_conics_json(capsys):
    code, payload = run_json(capsys, "count", "conics", "--json", "--degree", "5")
    assert code == 0
    assert payload["outcome"] == {"count": 609250}
    assert payload["recipe"] == "conics"


def test_count_bad_input_exits_one(capsys):
    code, _, err = run_cli(capsys, "count", "lines", "--ambient", "2", "--degrees", "5")
    assert code == 1
    assert "error" in err
    code, _, err = run_cli(capsys, "count", "conics", "--degree", "1")
    assert code == 1


def test_count_malformed_degrees_exits_one(capsys):
    code, _, err = run_cli(capsys, "count", "lines", "--ambient", "4", "--degrees", "five")
    assert code == 1
    assert "comma-separated" in err


def test_equivalence_family(capsys):
    code, out, _ = run_cli(capsys, "equivalence", "--family-dim", "1", "--chern-integrals", "0,20")
    assert code == 0
    assert "20" in out
    assert "connected" in out


def test_equivalence_family_json(capsys):
    code, payload = run_json(capsys, "equivalence", "--json", "--family-dim", "0")
    assert code == 0
    assert payload["equivalence"] == 1


def test_equivalence_cover(capsys):
    code, payload = run_json(capsys, "equivalence", "--json", "--cover", "3")
    assert code == 0
    assert payload["weight"] == "1/27"
    code, out, _ = run_cli(capsys, "equivalence", "--cover", "2")
    assert code == 0
    assert "1/8" in out


def test_equivalence_missing_data_exits_one(capsys):
    code, _, err = run_cli(capsys, "equivalence", "--family-dim", "2", "--chern-integrals", "0,1")
    assert code == 1
    assert "c_2" in err


def test_equivalence_flag_conflicts(capsys):
    code, _, err = run_cli(capsys, "equivalence", "--cover", "2", "--chern-integrals", "1")
    assert code == 1
    code, _, err = run_cli(capsys, "equivalence", "--cover", "2", "--family-dim", "1")
    assert code == 1


def test_ledger_check_builtin(capsys):
    code, out, _ = run_cli(capsys, "ledger", "check")
    assert code == 0
    assert out.count("PASS") == 5
    assert "5 ledgers, 0 failed" in out


def test_ledger_check_builtin_json(capsys):
    code, payload = run_json(capsys, "ledger", "check", "--json")
    assert code == 0
    assert payload["ok"] is True
    assert len(payload["ledgers"]) == 5
    assert all(entry["residual"] == 0 for entry in payload["ledgers"])


def test_ledger_check_failing_file(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text(json.dumps({
        "ledgers": [{
            "name": "off-by-six-hundred",
            "total": 609250,
            "components": [
                {"label": "a", "equivalence": 187250},
                {"label": "b", "equivalence": 258200},
                {"label": "c", "equivalence": 163200},
            ],
        }]
    }))
    code, out, _ = run_cli(capsys, "ledger", "check", str(path))
    assert code == 1
    assert "FAIL off-by-six-hundred" in out
    assert "residual 600" in out


def test_ledger_check_bad_file_exits_one(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{nope")
    code, _, err = run_cli(capsys, "ledger", "check", str(path))
    assert code == 1
    assert "error" in err
    code, _, err = run_cli(capsys, "ledger", "check", str(tmp_path / "missing.json"))
    assert code == 1


def test_verify_classical(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "classical")
    assert code == 0
    assert "FAIL" not in out
    assert "0 failed" in out
    assert "2875" in out
    assert "609250" in out


def test_verify_json(capsys):
    code, payload = run_json(capsys, "verify", "--json", "--suite", "classical")
    assert code == 0
    assert payload["passed"] is True
    names = [check["name"] for check in payload["checks"]]
    assert "lines-5-in-P4" in names
    assert "conics-5-in-P4" in names
    assert sum(1 for n in names if n.startswith("ledger-")) == 5


def test_verify_unknown_suite_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "verify", "--suite", "nonsense")
    assert code == 1
    assert "invalid choice" in err


def test_verify_failure_exits_one(monkeypatch, capsys):
    from curvecount.suites import CheckResult

    monkeypatch.setattr(cli, "run_suite", lambda name, seed=0: [CheckResult("x", "1", "2", False)])
    code, out, _ = run_cli(capsys, "verify", "--suite", "classical")
    assert code == 1
    assert "FAIL x" in out


def test_internal_error_exits_two(monkeypatch, capsys):
    def boom(name, seed=0):
        raise RuntimeError("wires crossed")

    monkeypatch.setattr(cli, "run_suite", boom)
    code, _, err = run_cli(capsys, "verify", "--suite", "classical")
    assert code == 2
    assert "internal error" in err


def test_missing_subcommand_is_usage_error(capsys):
    code, _, err = run_cli(capsys)
    assert code == 1
    assert "usage" in err
    code, _, err = run_cli(capsys, "ledger")
    assert code == 1


def test_help_exits_zero(capsys):
    code, out, _ = run_cli(capsys, "--help")
    assert code == 0
    assert "grass" in out


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "curvecount", "grass", "integrate(sigma[1]^4) in G(2,4)"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "2"


def test_console_script_subprocess():
    proc = subprocess.run(
        ["curvecount", "count", "lines", "--ambient", "3", "--degrees", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "count:         27" in proc.stdout
