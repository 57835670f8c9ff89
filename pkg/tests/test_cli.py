import json
import subprocess
import sys

import pytest

from repzeta import cli


def run(argv, capsys):
    code = cli.run(argv)
    return code, capsys.readouterr().out


def test_local_zeta_text(capsys):
    code, out = run(["local-zeta", "--family", "G", "--n", "1", "--format", "text"], capsys)
    assert code == 0
    assert out.strip() == "(1 - t)/(1 - q*t)"


def test_local_zeta_json(capsys):
    code, out = run(["local-zeta", "--family", "H", "--n", "2", "--check", "--q", "3"], capsys)
    rep = json.loads(out)
    assert code == 0
    assert rep["outcome"] == "pass"
    assert set(rep) == {"command", "inputs", "outcome", "payload"}
    assert rep["payload"]["coefficients"][0] == 1


def test_coeffs(capsys):
    code, out = run(["coeffs", "--family", "G", "--n", "1", "--bound", "6"], capsys)
    assert code == 0
    assert json.loads(out)["payload"]["coeffs"] == [1, 1, 2, 2, 4, 2]


@pytest.mark.parametrize("argv", [
    ["weyl-stats", "--n", "2"],
    ["conjecture-L", "--n", "3"],
    ["counts", "--space", "Sym", "--size", "2", "--q", "3"],
    ["counts", "--family", "G", "--n", "2", "--p", "2"],
    ["igusa", "--kind", "MatDet", "--size", "1", "--p", "2"],
])
def test_deterministic(argv, capsys):
    code1, out1 = run(argv, capsys)
    code2, out2 = run(argv, capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    json.loads(out1)


def test_verify_suite(capsys):
    code, out = run(["verify", "--suite", "identities", "--max-n", "2"], capsys)
    assert code == 0
    assert json.loads(out)["outcome"] == "pass"


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.run(["nonsense"])
    assert exc.value.code == 2
    assert cli.run(["local-zeta"]) == 2
    assert cli.run(["counts", "--family", "F", "--n", "2", "--delta", "1", "--p", "3", "--order", "2"]) == 2


def test_big_ints_are_strings():
    assert cli._jsonable(2 ** 70) == str(2 ** 70)
    assert cli._jsonable(5) == 5


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "repzeta", "local-zeta", "--family", "F", "--n", "1",
                          "--format", "text"], capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "(1 - t)/(1 - q*t)"
