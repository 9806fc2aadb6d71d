import io
import json
import subprocess
import sys

import pytest

from sbraid.cli import run


def cli(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_nf_json_bytes():
    code, out = cli("nf", "-n", "3", "s1-", "--json")
    assert code == 0
    assert out == '{"n":3,"power":-1,"base":"s1 s2"}\n'


def test_nf_text():
    assert cli("nf", "-n", "3", "s1-") == (0, "D^-1 . s1 s2\n")
    assert cli("nf", "-n", "3", "") == (0, "D^0 . 1\n")
    code, out = cli("nf", "-n", "3", "s1-", "--side", "right", "--json")
    assert json.loads(out) == {"n": 3, "power": -1, "base": "s2 s1", "side": "right"}


def test_eq_exit_codes():
    assert cli("eq", "-n", "3", "x1 s2 s1", "s2 s1 x2") == (0, "equal\n")
    assert cli("eq", "-n", "3", "x1 x2", "x2 x1") == (1, "not-equal\n")
    code, out = cli("eq", "-n", "3", "x1 x2", "x2 x1", "--json")
    assert (code, out) == (1, '{"n":3,"result":"not-equal"}\n')


def test_conj():
    assert cli("conj", "-n", "3", "s1", "s2") == (0, "conjugate\n")
    assert cli("conj", "-n", "3", "x1", "s1") == (1, "not-conjugate\n")


def test_greedy():
    code, out = cli("greedy", "-n", "3", "s2 s1 x1 s1", "--json")
    assert code == 0
    assert json.loads(out) == {"n": 3, "power": 0,
                               "blocks": [{"fragments": ["s2 s1", "s1"], "xs": [1]}]}
    code, out = cli("greedy", "-n", "3", "s2 s1 x1 s1")
    assert out == "D^0  [s2 s1 | s1] x1\n"


def test_summit_json():
    code, out = cli("summit", "-n", "3", "s1", "--json")
    assert code == 0
    assert json.loads(out)["members"] == [{"n": 3, "power": 0, "base": "s1"},
                                          {"n": 3, "power": 0, "base": "s2"}]


def test_convert():
    assert cli("convert", "-n", "3", "s1 x2 s2-", "--to", "band") == (0, "a[2,1] b[3,2] a[3,2]-\n")
    assert cli("convert", "-n", "3", "a[3,1]", "--to", "artin") == (0, "s2 s1 s2-\n")


def test_verify():
    code, out = cli("verify", "-n", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["n"] == 3 and all(not f["failures"] for f in data["families"])


def test_rand_is_reproducible():
    a = cli("rand", "-n", "4", "--length", "6", "--count", "3", "--seed", "9")
    b = cli("rand", "-n", "4", "--length", "6", "--count", "3", "--seed", "9")
    assert a == b and a[0] == 0
    assert len(a[1].splitlines()) == 3
    code, out = cli("rand", "-n", "3", "--profile", "positive", "--json", "--seed", "1")
    assert "-" not in " ".join(json.loads(out)["words"])


def test_selfcheck():
    code, out = cli("selfcheck", "--json")
    assert code == 0
    assert all(r["ok"] for r in json.loads(out))


@pytest.mark.parametrize("argv", [
    ("nf", "-n", "3", "s3"),
    ("nf", "-n", "3", "x1-"),
    ("nf", "-n", "1", "s1"),
    ("nf", "s1"),
    ("bogus",),
    ("convert", "-n", "3", "b[2,1]-", "--to", "artin"),
])
def test_bad_input(argv, capsys):
    code, out = cli(*argv)
    assert code == 2 and out == ""
    err = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert set(err) == {"error", "message"}


def test_cap_exit_code(capsys):
    code, _ = cli("nf", "-n", "3", "s2 s1 x1 s1", "--exhaustive", "--cap", "1")
    assert code == 3
    assert json.loads(capsys.readouterr().err)["error"] == "CapExceeded"


def test_console_script_deterministic():
    cmd = [sys.executable, "-m", "sbraid.cli", "nf", "-n", "4", "s1 s2- x3 s3- s1", "--json"]
    a = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert a == b and json.loads(a)["n"] == 4
