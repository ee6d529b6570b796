import json

import pytest

from a3zeta import __version__
from a3zeta.cli import run


def test_eval_golden(capsys):
    assert run(["eval", "--tuple", "2,2,2,2,2,2", "--lattice", "Q", "--twist", "zero"]) == 0
    out = capsys.readouterr().out
    assert "matches (1103/145332633600)·π¹²" in out


def test_eval_without_golden(capsys):
    assert run(["eval", "--tuple", "2,2,2,2,2,2", "--lattice", "Q", "--no-golden", "--cutoff", "50"]) == 0
    assert "matches" not in capsys.readouterr().out


def test_derive(capsys):
    assert run(["derive", "--family", "pnew", "--k", "1", "--target", "A3"]) == 0
    out = capsys.readouterr().out
    assert "1/63·π⁶·ζ(11) + 199/30·π⁴·ζ(13) − 365·π²·ζ(15) + 2941·ζ(17)" in out


def test_verify_json(tmp_path, capsys):
    path = tmp_path / "report.json"
    code = run(["verify", "--theorem", "PU4", "--p", "2", "--q", "2", "--a", "2", "--b", "2",
                "--c", "2", "--s", "2", "--tol", "1e-6", "--json", str(path)])
    assert code == 0
    doc = json.loads(path.read_text(encoding="utf-8"))
    assert list(doc) == ["version", "command", "inputs", "result", "error_bound", "duration_ms"]
    assert doc["version"] == __version__
    assert doc["result"]["passed"] is True
    assert float(doc["result"]["residual"]) < 1e-6
    assert isinstance(doc["result"]["lhs"]["re"], str)


def test_relation_prints_rhs(capsys):
    assert run(["relation", "--theorem", "SO6", "--p", "2", "--q", "2", "--a", "2", "--b", "2", "--c", "2"]) == 0
    out = capsys.readouterr().out
    assert "zeta(s+10)" in out and "+2 * zeta_3(2,s,2,2,2,2)" in out


def test_relation_specialized(tmp_path, capsys):
    path = tmp_path / "r.json"
    assert run(["relation", "--theorem", "PU4", "--p", "2", "--q", "2", "--a", "2", "--b", "2", "--c", "2",
                "--s", "2", "--json", str(path)]) == 0
    doc = json.loads(path.read_text(encoding="utf-8"))
    assert doc["result"]["specialized"]["terms"][0]["coeff"] == {"re": "1103/12111052800", "im": "0"}


@pytest.mark.parametrize("argv,flag", [
    (["eval", "--tuple", "1,1,1,1,1,1"], "--tuple"),
    (["eval", "--tuple", "2,2,2"], "--tuple"),
    (["eval", "--tuple", "2,2,2,2,2,2", "--lattice", "X"], "--lattice"),
    (["verify", "--theorem", "A3", "--p", "0", "--q", "2", "--a", "2", "--b", "2", "--c", "2", "--s", "2"], "--p"),
    (["eval", "--tuple", "2,2,2,2,2,2", "--prec-bits", "10"], "--prec-bits"),
    (["suite"], "--paper-examples"),
    (["relation", "--theorem", "A3", "--p", "2", "--q", "2", "--a", "2", "--b", "2", "--c", "2", "--s", "-3"],
     "--s"),
])
def test_usage_errors_name_flag(argv, flag, capsys):
    assert run(argv) == 2
    assert flag in capsys.readouterr().err


def test_json_write_failure(tmp_path, capsys):
    bad = tmp_path / "missing" / "r.json"
    assert run(["derive", "--k", "1", "--json", str(bad)]) == 2
    assert str(bad) in capsys.readouterr().err


def test_suite_subset(capsys):
    assert run(["suite", "--paper-examples", "--only", "1,7"]) == 0
    out = capsys.readouterr().out
    assert out.count("[PASS]") == 2
