from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from conftest import CATALAN
from dirichlet_lab.cli import main
from dirichlet_lab.report import CSV_COLUMNS


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_characters(capsys):
    code, out, _ = run(capsys, "characters", "--q", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and [c["parity"] for c in doc["characters"]] == [1, -1]
    code, out, _ = run(capsys, "characters", "--q", "5")
    parities = [c["parity"] for c in json.loads(out)["characters"]]
    assert sorted(parities) == [-1, -1, 1, 1]
    code, out, err = run(capsys, "characters", "--q", "2")
    assert code == 2 and out == "" and "q" in err


def test_characters_csv(capsys):
    code, out, _ = run(capsys, "characters", "--q", "12", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 4 and rows[0]["conductor"] == "1"


def test_gauss(capsys):
    code, out, _ = run(capsys, "gauss", "--q", "4", "--chi", "1")
    doc = json.loads(out)
    assert code == 0 and doc["values"][0]["im"] == pytest.approx(2.0)
    assert doc["separability_deviation"] < 1e-12
    code, out, _ = run(capsys, "gauss", "--q", "5", "--chi", "2", "--z", "1", "--format", "csv")
    assert code == 0 and len(out.strip().splitlines()) == 2
    assert run(capsys, "gauss", "--q", "5", "--chi", "9")[0] == 2


def test_lvalue(capsys):
    code, out, _ = run(capsys, "lvalue", "--q", "4", "--chi", "1", "--s", "2", "--method", "corollary")
    doc = json.loads(out)
    assert code == 0 and abs(doc["re"] - CATALAN) < 1e-10 and doc["abs_dev"] <= 1e-9
    code, out, _ = run(capsys, "lvalue", "--q", "4", "--chi", "1", "--s", "1", "--method", "theorem2")
    assert code == 0 and abs(json.loads(out)["re"] - 0.7853981634) < 1e-10
    code, out, err = run(capsys, "lvalue", "--q", "4", "--chi", "1", "--s", "2", "--method", "theorem2")
    assert code == 2 and "parity" in err
    code, _, _ = run(capsys, "lvalue", "--q", "4", "--chi", "1", "--s", "2", "--method",
                     "corollary", "--convention", "corollary10=printed")
    assert code == 1


def test_lvalue_other_methods(capsys):
    for method, s in (("oracle", 3), ("direct", 3), ("theorem1", 2), ("alkan", 3)):
        code, out, _ = run(capsys, "lvalue", "--q", "7", "--chi", "1", "--s", str(s),
                           "--method", method)
        assert code == 0, method
    code, _, err = run(capsys, "lvalue", "--q", "3", "--chi", "0", "--s", "1")
    assert code == 2 and "pole" in err


def test_verify_csv(capsys, tmp_path):
    out_path = tmp_path / "v.csv"
    code, _, _ = run(capsys, "verify", "--q-min", "3", "--q-max", "12", "--s-max", "5",
                     "--tol", "1e-7", "--format", "csv", "--out", str(out_path))
    assert code == 0
    rows = list(csv.DictReader(out_path.open()))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert {r["identity"] for r in rows} >= {"theorem1", "theorem2", "alkan", "corollary_even",
                                             "corollary_odd", "meanvalue_s1_odd"}
    assert max(float(r["abs_dev"]) for r in rows) <= 1e-7


def test_verify_printed_convention_fails(capsys):
    code, out, err = run(capsys, "verify", "--q-min", "3", "--q-max", "8", "--s-max", "3",
                         "--convention", "theorem1=printed")
    doc = json.loads(out)
    assert code == 1 and not doc["passed"]
    t1 = [r for r in doc["records"] if r["identity"] == "theorem1"]
    assert t1 and all(r["abs_dev"] > 0.1 for r in t1)
    assert "violation" in err


def test_verify_usage(capsys):
    assert run(capsys, "verify", "--q-min", "10", "--q-max", "3")[0] == 2
    assert run(capsys, "verify", "--convention", "bogus")[0] == 2


def test_verify_round_trip(capsys, tmp_path):
    first = tmp_path / "a.json"
    code, _, _ = run(capsys, "verify", "--q-min", "3", "--q-max", "10", "--s-max", "4",
                     "--out", str(first))
    assert code == 0
    second = tmp_path / "b.json"
    code, _, _ = run(capsys, "verify", "--from-report", str(first), "--out", str(second))
    a, b = json.loads(first.read_text()), json.loads(second.read_text())
    assert code == 0
    assert a["summary"] == b["summary"] and a["records"] == b["records"]
    for name, entry in a["summary"].items():
        assert entry["max_abs_dev"] == max(r["abs_dev"] for r in a["records"]
                                           if r["identity"] == name)


def test_adjudicate(capsys):
    code, out, _ = run(capsys, "adjudicate", "--q-max", "10", "--s-max", "6", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert {k: v["selected"] for k, v in doc["sites"].items()} == {
        "theorem1_prefactor": "s_plus_1_mod_2", "appell_sign": "alternating",
        "corollary10_prefactor": "imaginary_unit"}
    integral = next(e for e in doc["errata"] if e["id"] == "corollary-proof-integral")
    assert abs(integral["computed_value"] + 0.98187215105020) < 1e-12
    code, out, _ = run(capsys, "adjudicate", "--q-max", "8", "--s-max", "3")
    assert code == 0 and "[appell_sign] not separable" in out


def test_scan_asymptotic(capsys):
    code, out, _ = run(capsys, "scan-asymptotic", "--q-min", "3", "--q-max", "30")
    doc = json.loads(out)
    assert code == 0 and all(r["within"] for r in doc["rows"])
    assert doc["rows"][1]["q"] == 4 and doc["rows"][1]["residual"] == pytest.approx(-0.38315, abs=1e-5)


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dirichlet_lab.cli", "characters", "--q", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stderr
