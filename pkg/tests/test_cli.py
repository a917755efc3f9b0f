import json
import subprocess
import sys
from fractions import Fraction

import pytest

from lnewton import cli
from lnewton.poly import parse_poly
from lnewton.slopes import SlopeReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def slopes_of(doc):
    out = []
    for row in doc["polygon"]["slopes"]:
        out += [row["slope"]] * row["multiplicity"]
    return out


def test_parse_examples():
    f = parse_poly("x^3+2x", 7)
    assert f.exponent_columns() == [(1,), (3,)] and f.coefficients() == [2, 1]
    g = parse_poly("x^3+x*y+y^2", 11)
    assert g.exponent_columns() == [(0, 2), (1, 1), (3, 0)]
    warn = []
    h = parse_poly("x^3+7x", 7, warnings=warn)
    assert h.exponent_columns() == [(3,)] and len(warn) == 1


def test_slopes_command(capsys):
    code, out = run(capsys, "slopes", "--p", "11", "x^3+x")
    doc = cli.loads(out)
    assert code == 0 and doc["status"] == "proved"
    assert slopes_of(doc) == [Fraction(2, 5), Fraction(3, 5)]
    assert doc["schema_version"] == cli.SCHEMA_VERSION


def test_oracle_command(capsys):
    code, out = run(capsys, "oracle", "--p", "5", "x^7+x^4")
    doc = cli.loads(out)
    assert code == 0
    assert slopes_of(doc) == [Fraction(1, 4)] + [Fraction(1, 2)] * 4 + [Fraction(3, 4)]


def test_oracle_records_nondegeneracy(capsys):
    code, out = run(capsys, "oracle", "x^3+x", "--p", "5")
    doc = cli.loads(out)
    assert doc["nondegeneracy"] == {"method": "degree criterion", "certified": True,
                                    "nondegenerate": True}
    # no witness found is evidence, not a certificate
    code, out = run(capsys, "oracle", "x^3+x*y+y^2", "--p", "5")
    doc = cli.loads(out)
    assert doc["nondegeneracy"]["certified"] is False
    # (x+y)^2 vanishes with its partials at (1, -1)
    code, out = run(capsys, "oracle", "x^2+2*x*y+y^2+x", "--p", "5")
    doc = cli.loads(out)
    nd = doc["nondegeneracy"]
    assert nd["nondegenerate"] is False and nd["witness"]["face"] == [[0, 2], [1, 1], [2, 0]]


def test_auto_command(capsys):
    code, out = run(capsys, "auto", "--p", "7", "x^4+x")
    doc = cli.loads(out)
    assert code == 0 and doc["agreement"] and doc["paths"] == ["oracle", "slopes"]
    assert slopes_of(doc) == [Fraction(1, 2)] * 3


def test_warning_is_reported(capsys):
    code, out = run(capsys, "oracle", "--p", "7", "x^3+7x")
    doc = cli.loads(out)
    assert code == 0 and doc["f"] == "x^3" and doc["warnings"]


def test_error_exit_code(capsys):
    code, out = run(capsys, "slopes", "--p", "3", "x^3+x")
    doc = json.loads(out)
    assert code == 1 and doc["status"] == "error"
    assert doc["error"]["code"] == "regime_error"


def test_missing_prime(capsys, monkeypatch):
    monkeypatch.delenv("LNEWTON_P", raising=False)
    code, _ = run(capsys, "slopes", "x^3+x")
    assert code == 1


def test_inconclusive_exit_code(capsys, monkeypatch):
    rep = SlopeReport(2, None, None, "bound-exceeded", 11, 3, lower_bound=Fraction(1))
    monkeypatch.setattr(cli, "_slopes_path", lambda f: (None, [rep]))
    code, out = run(capsys, "slopes", "--p", "11", "x^3+x")
    assert code == 2 and cli.loads(out)["status"] == "inconclusive"


def test_environment_prime(capsys, monkeypatch):
    monkeypatch.setenv("LNEWTON_P", "11")
    code, out = run(capsys, "slopes", "x^3+x")
    assert code == 0 and cli.loads(out)["p"] == 11
    # flags win over the environment
    code, out = run(capsys, "slopes", "--p", "5", "x^3+x")
    assert cli.loads(out)["p"] == 5


def test_csv_output(capsys):
    code, out = run(capsys, "slopes", "--p", "11", "--format", "csv", "x^3+x")
    lines = out.splitlines()
    assert lines[0] == "section,key,value"
    assert "slope,2/5,1" in lines and "slope,3/5,1" in lines


def test_out_file(tmp_path, capsys):
    path = tmp_path / "doc.json"
    code, out = run(capsys, "slopes", "--p", "11", "--out", str(path), "x^3+x")
    assert out == "" and cli.loads(path.read_text())["status"] == "proved"


def test_tables_command(capsys):
    code, out = run(capsys, "tables", "--p", "5", "--s-max", "3", "x^7+2x^4")
    doc = cli.loads(out)
    assert code == 0
    assert [r["ord_p"] for r in doc["coefficients"]] == [0, Fraction(1, 4), Fraction(3, 4)]


def test_gauss_check_command(capsys):
    code, out = run(capsys, "gauss-check", "--q", "9")
    doc = cli.loads(out)
    assert code == 0 and len(doc["rows"]) == 8 and all(r["ok"] for r in doc["rows"])
    code, _ = run(capsys, "gauss-check", "--q", "5", "--kind", "hd", "--k", "2")
    assert code == 0
    code, _ = run(capsys, "gauss-check", "--q", "6")
    assert code == 1


def test_congruence_command(capsys):
    code, out = run(capsys, "congruence", "--p", "7", "x^3+x")
    doc = cli.loads(out)
    assert doc["levels"][1]["S"] == 42 and doc["levels"][1]["formula"] == 42


def test_reproduce_command(capsys):
    code, out = run(capsys, "reproduce", "gk", "hd")
    doc = cli.loads(out)
    assert code == 0 and doc["failed"] == 0 and doc["passed"] == 8
    code, out = run(capsys, "reproduce", "nope")
    assert code == 1


def test_document_round_trip(capsys):
    _, out = run(capsys, "slopes", "--p", "11", "x^3+x")
    assert cli.dumps(cli.loads(out)) == out


def test_console_script():
    res = subprocess.run([sys.executable, "-m", "lnewton.cli", "slopes", "--p", "11", "x^3+x"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and cli.loads(res.stdout)["status"] == "proved"
