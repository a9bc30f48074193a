import json

import pytest

from onepart.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_one_part(capsys):
    code, out, _ = run(capsys, "compute", "--genus", "1", "--mu", "1,1", "--one-part")
    assert code == 0 and out.strip() == "1/6"


def test_compute_double(capsys):
    code, out, _ = run(capsys, "compute", "--genus", "0", "--mu", "2", "--nu", "2")
    assert code == 0 and out.strip() == "1/2"


def test_cross_check_json(capsys):
    code, out, _ = run(capsys, "compute", "-g", "2", "--mu", "2,1,1", "--one-part", "--cross-check", "--format", "json")
    assert code == 0
    recs = json.loads(out)
    assert {r["route"] for r in recs} == {"series", "oracle", "cutjoin"}
    assert {r["value"] for r in recs} == {"728/45"}


def test_csv_columns(capsys):
    code, out, _ = run(capsys, "compute", "-g", "1", "--mu", "3,2", "--nu", "4,1", "--route", "oracle", "--format", "csv")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header == "g,mu,nu,value,route,micros"
    assert row.startswith('1,"3,2","4,1",104/3,oracle,')


def test_orbifold_and_spin(capsys):
    assert run(capsys, "compute", "-g", "1", "--mu", "2,2", "--orbifold", "2")[1].strip() == "10/3"
    assert run(capsys, "compute", "-g", "0", "--mu", "1,1", "--spin", "1")[1].strip() == "1"


def test_polynomial_text(capsys):
    code, out, _ = run(capsys, "compute", "-g", "1", "--polynomial", "--n", "3")
    assert out.strip() == "1/24 (Σ μ_i^2 - 1)"


def test_table(capsys):
    code, out, _ = run(capsys, "table", "-g", "1", "--d", "3", "--one-part")
    lines = out.strip().splitlines()
    assert len(lines) == 3 and lines[0].split("\t")[1] == "1"


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "-g", "0", "--mu", "1,1,1", "--nu", "2,1", "--format", "json")
    rec = json.loads(out)
    assert rec["raw"] == 24 and rec["value"] == "4" and rec["m"] == 3


def test_moduli_commands(capsys):
    assert run(capsys, "moduli", "psi", "--genus", "1", "--exp", "1")[1].strip() == "1/24"
    assert run(capsys, "moduli", "hodge", "--genus", "1", "--d", "5")[1].strip() == "1/6"
    assert run(capsys, "moduli", "chiodo-g1", "--d", "1")[1].strip() == "0"


def test_verify_exit_codes(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--suite", "comparison")
    assert code == 0 and json.loads(out)["passed"]
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--suite", "chiodo", "--gmax", "2", "--dmax", "4", "--out", str(target))
    assert code == 0 and json.loads(target.read_text())["identity"] == "chiodo"


def test_verify_failure_exit_code(capsys):
    # the printed table drops terms at genus 4 and 5
    code, _, err = run(capsys, "verify", "--suite", "appendix")
    assert code == 1 and "'g': 4" in err


def test_argument_errors(capsys):
    assert run(capsys, "compute", "-g", "1", "--mu", "3", "--nu", "2")[0] == 2
    assert run(capsys, "compute", "-g", "1", "--mu", "3,1", "--nu", "2,2", "--route", "series")[0] == 2
    assert run(capsys, "compute", "-g", "1", "--mu", "3,1", "--orbifold", "3")[0] == 2
    assert run(capsys, "moduli", "psi")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_budget_refusal(capsys, monkeypatch):
    code, _, err = run(capsys, "compute", "-g", "1", "--mu", "1,1,1,1,1,1", "--one-part", "--route", "oracle",
                       "--budget", "10")
    assert code == 1 and "budget" in err
    monkeypatch.setenv("HURWITZ_BUDGET", "10")
    assert run(capsys, "oracle", "-g", "1", "--mu", "1,1,1,1,1,1", "--one-part")[0] == 1
