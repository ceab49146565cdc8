import json
import subprocess
import sys
from pathlib import Path

import pytest

from cabcodes.cli import main, oracle_check, reproduce

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("example", ["exord", "exmot", "klein", "q8", "q16", "dualprimary"])
def test_reproduce_matches_golden(example, tmp_path):
    text = reproduce(example, tmp_path)
    assert text == (GOLDEN / f"{example}.txt").read_text()
    for f in tmp_path.iterdir():
        assert f.read_bytes() == (GOLDEN / f.name).read_bytes()
    assert reproduce(example) == text


def test_reproduce_key_lines():
    assert "bound = 13 (FR bound = 10)" in reproduce("exmot")
    assert "FR bound at X = 5" in reproduce("exord")
    klein = reproduce("klein")
    assert "Eimp(11): span {1, X, Y, X^2, X*Y, Y^2}, dimension 6, bound 11" in klein
    assert "exclusion construction (12): span {1, X, Y, X^2, X*Y, X^3}, dimension 6, bound 12" in klein
    assert "[32,2,28]" in reproduce("q8") and "[32,15,12]" in reproduce("q8")


def test_q64_needs_flag(capsys):
    code, _, err = run(capsys, "reproduce", "q64")
    assert code == 3
    assert "--allow-long" in err


def test_cosets(capsys):
    code, out, _ = run(capsys, "cosets", "2^4")
    assert code == 0
    lines = out.splitlines()
    assert lines[1].startswith("C_1 = {1, 2, 4, 8}  F_1(X) = X^8+X^4+X^2+X  balanced = True")
    assert lines[4].endswith("F_7(X) = X^14+X^13+X^11+X^7  balanced = True")
    assert sum("balanced = True" in l for l in lines) == 2


def test_field_info(capsys):
    code, out, _ = run(capsys, "field", "info", "2^3")
    assert code == 0
    assert "modulus: x^3+x+1" in out


def test_cab_commands(capsys):
    code, out, _ = run(capsys, "cab", "build", "--field", "2^3", "--h", "coset:3")
    assert code == 0
    assert json.loads(out) == {"a": 4, "b": 6, "wX": 3, "wY": 2, "zeros": 32, "optimal": True}
    code, out, _ = run(capsys, "cab", "list", "--field", "2^3")
    assert code == 0
    assert {(d["a"], d["b"]) for d in map(json.loads, out.splitlines())} == {(4, 6), (4, 7)}


def test_bound_command(capsys):
    code, out, _ = run(capsys, "bound", "--field", "2^3", "--cab", "trace,coset:3", "--monomial", "X^3", "--witnesses")
    assert code == 0
    assert "12,X^3,9,1,13;14,13" in out
    assert "FR bound = 10" in out
    assert sum(l.startswith("L(") for l in out.splitlines()) == 27
    code, out, _ = run(
        capsys, "bound", "--field", "2^3", "--poly", "X^3Y+Y^3+X", "--weights", "2,3", "--index", "7", "--exclude", "6", "--json"
    )
    assert code == 0
    assert json.loads(out)["bound"] == 13


def test_code_table(capsys, tmp_path):
    code, out, _ = run(
        capsys, "code", "table", "--field", "2^3", "--poly", "X^3Y+Y^3+X", "--weights", "2,3", "--delta-range", "11:12", "--out", str(tmp_path)
    )
    assert code == 0
    assert out.splitlines() == ["delta,k,n", "11,6,22", "12,5,22"]
    assert (tmp_path / "eimp_series.csv").exists()


@pytest.mark.parametrize(
    "argv",
    [
        ["bound", "--field", "2^3", "--cab", "trace", "--index", "1"],
        ["bound", "--field", "2^3", "--cab", "trace,coset:3", "--index", "99"],
        ["bound", "--field", "2^3", "--cab", "trace,coset:3"],
        ["bound", "--field", "6", "--cab", "trace,coset:3", "--index", "1"],
        ["bound", "--field", "2^3", "--poly", "X+", "--weights", "1", "--index", "1"],
        ["cab", "build", "--field", "2^3"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_oracle_check():
    bad, log = oracle_check()
    assert bad == 0
    assert any(l.startswith("klein E(") for l in log)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cabcodes", "reproduce", "exord"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout == (GOLDEN / "exord.txt").read_text()
