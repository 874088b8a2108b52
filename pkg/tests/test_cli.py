import csv
import io
import json
import subprocess
import sys

import pytest

from qsdesign import fixtures
from qsdesign.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_steiner_rejected(capsys):
    code, out, _ = run(capsys, "check", "--family", "steiner", "--n", "3", "--m", "10",
                       "--mu", "2", "--format", "json")
    rep = json.loads(out)
    assert code == 1
    assert rep["verdict"] == "rejected"
    failed = [c for c in rep["conditions"] if not c["passed"]]
    assert failed[0]["label"] == "4.2b(p=2)"
    assert rep["parameters"][0]["v"] == 21


def test_check_spectral_feasible(capsys):
    code, out, _ = run(capsys, "check", "--rho", "1", "--sigma", "-2", "--f", "5", "--g", "4",
                       "--mu", "1", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["verdict"] == "feasible"
    p = rep["parameters"][0]
    assert (p["v"], p["k"], p["lambda"]) == (6, 3, 2)


def test_check_affine_plane(capsys):
    code, out, _ = run(capsys, "check", "--family", "multipartite", "--m", "4", "--n", "3",
                       "--mu", "1", "--format", "json")
    assert code == 0
    assert json.loads(out)["parameters"][0]["b"] == 12


def test_conference_diagnostic(capsys):
    code, out, err = run(capsys, "check", "--family", "conference", "--q", "13", "--mu", "1",
                         "--format", "json")
    assert code == 1
    assert "conference" in err
    json.loads(out)


def test_derive_csv(capsys):
    code, out, _ = run(capsys, "derive", "--family", "symplectic", "--d", "3", "--q", "2",
                       "--mu", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert ["b", "v", "r", "k", "lambda", "lambda1", "lambda2", "mu", "nu"] in rows


def test_table1_csv(capsys):
    code, out, _ = run(capsys, "table1", "--max-n", "3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert len(rows) == 9
    assert [r["verdict"] for r in rows].count("no") == 1 and rows[0]["verdict"] == "no"


def test_symmetric(capsys):
    assert run(capsys, "symmetric", "--v", "43", "--k", "7", "--lambda", "1")[0] == 1
    assert run(capsys, "symmetric", "--v", "22", "--k", "7", "--lambda", "2")[0] == 1
    assert run(capsys, "symmetric", "--v", "7", "--k", "3", "--lambda", "1")[0] == 0
    code, _, err = run(capsys, "symmetric", "--v", "10", "--k", "4", "--lambda", "1")
    assert code == 2 and "lambda" in err


@pytest.mark.parametrize("name,delta", [("petersen", 5), ("octahedron", 3)])
def test_graph_command(capsys, tmp_path, name, delta):
    path = tmp_path / f"{name}.txt"
    fixtures.write_fixture(fixtures.named_fixtures()[name], path)
    code, out, _ = run(capsys, "graph", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["delta"] == delta


def test_graph_graph6_and_non_srg(capsys, tmp_path):
    g6 = tmp_path / "p.g6"
    fixtures.write_fixture(fixtures.petersen(), g6, "graph6")
    assert run(capsys, "graph", str(g6), "--graph-format", "graph6")[0] == 0
    path = tmp_path / "p4.txt"
    fixtures.write_fixture(fixtures.path(4), path)
    code, _, err = run(capsys, "graph", str(path))
    assert code == 1 and "regular" in err


def test_graph_parse_error(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("0 1\n1 x\n")
    code, _, err = run(capsys, "graph", str(path))
    assert code == 2 and "line 2" in err


def test_hilbert(capsys):
    code, out, _ = run(capsys, "hilbert", "-1", "-1", "--p", "2", "--format", "json")
    assert json.loads(out)["conditions"][0]["passed"] is False
    code, out, _ = run(capsys, "hilbert", "1/2", "7", "--format", "json")
    assert code == 0


def test_sieves(capsys):
    for argv in (["sieve", "steiner", "--n", "3", "--mu", "2", "--max-m", "40"],
                 ["sieve", "multipartite", "--max-alpha", "2"],
                 ["sieve", "cotriangular", "--mu", "2", "--max-n", "60"],
                 ["sieve", "symplectic", "--q-max", "9", "--d-max", "3"],
                 ["sieve", "triangular", "--mu", "2"]):
        code, out, _ = run(capsys, *argv, "--format", "csv")
        assert code in (0, 1)
        assert out.splitlines()


def test_env_default_format(capsys, monkeypatch):
    monkeypatch.setenv("QSDESIGN_FORMAT", "json")
    code, out, _ = run(capsys, "symmetric", "--v", "7", "--k", "3", "--lambda", "1")
    assert json.loads(out)["verdict"] == "pass"


def test_usage_errors_exit_2():
    r = subprocess.run([sys.executable, "-m", "qsdesign", "check", "--bogus"],
                       capture_output=True, text=True)
    assert r.returncode == 2 and r.stdout == ""
    r = subprocess.run([sys.executable, "-m", "qsdesign", "check", "--family", "steiner",
                        "--n", "3", "--mu", "2"], capture_output=True, text=True)
    assert r.returncode == 2
