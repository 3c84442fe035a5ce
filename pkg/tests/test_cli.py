import json
from importlib.resources import files

import jsonschema
import pytest

from eulersums.cli import main

SCHEMA = json.loads(files("eulersums").joinpath("data/report.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    return code, data


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("MZV_CACHE_DIR", str(tmp_path))
    return tmp_path


def test_verify_theorem1_k5(capsys, cache_dir):
    code, out, _ = run(capsys, "verify", "theorem1", "--k", "5", "--digits", "40", "--cache-dir", str(cache_dir))
    assert code == 0 and out.startswith("PASS")
    code, data = run_json(capsys, "verify", "theorem1", "--k", "5", "--digits", "40", "--cache-dir", str(cache_dir))
    assert code == 0 and data["pass"] is True and data["params"] == {"k": 5}


def test_verify_pushdown(capsys):
    code, out, _ = run(capsys, "verify", "pushdown39", "--digits", "40", "--no-cache")
    assert code == 0 and "PASS" in out


def test_verify_reports_failure_with_exit_1(capsys, monkeypatch):
    import eulersums.identities as ids
    from eulersums.identities import Identity, zeta

    monkeypatch.setitem(ids.IDENTITY_FAMILIES, "theorem1", (lambda k: Identity("theorem1", {"k": k}, zeta(2) - zeta(3)), ("k",)))
    code, out, _ = run(capsys, "verify", "theorem1", "--k", "1", "--digits", "20", "--no-cache")
    assert code == 1 and out.startswith("FAIL")
    code, data = run_json(capsys, "verify", "theorem1", "--k", "1", "--digits", "20", "--no-cache")
    assert code == 1 and data["pass"] is False


def test_coaction_reduced_zero(capsys):
    code, out, _ = run(capsys, "coaction", "z(-3,-9)", "--r", "1", "--reduce")
    assert code == 0 and out.strip() == "0"
    code, data = run_json(capsys, "coaction", "z(-3,-9)", "--r", "1", "--reduce")
    assert data["terms"] == []


def test_coaction_raw(capsys):
    code, data = run_json(capsys, "coaction", "I(-1,0)", "--r", "1")
    assert code == 0 and len(data["terms"]) == 2
    assert run(capsys, "coaction", "z(2)", "--r", "2", "--reduce")[0] == 2


def test_eval_and_divergence(capsys, cache_dir):
    code, data = run_json(capsys, "eval", "z(2,-2) + 2*z(1,-3)", "--digits", "20")
    assert code == 0 and data["mid"].startswith("3.3822601053")
    assert run(capsys, "eval", "z(1)", "--no-cache")[0] == 1
    assert run(capsys, "eval", "zr(1;1,-2)", "--no-cache")[0] == 0
    assert run(capsys, "eval", "z(2,1)", "--regularize", "--no-cache")[0] == 0


def test_digits_env_override(capsys, monkeypatch):
    monkeypatch.setenv("MZV_DIGITS", "12")
    code, data = run_json(capsys, "eval", "z(2)", "--no-cache")
    assert data["digits"] == 12


def test_identity_show_and_list(capsys):
    code, out, _ = run(capsys, "identity", "show", "theorem1", "--k", "1")
    assert code == 0
    assert out.strip() == "-49/16*z(4) + 2*z(1,-3) - 1/2*z(2,2) + z(2,-2) + 5/4*z(2)*z(2) = 0"
    code, data = run_json(capsys, "identity", "show", "depth1", "--k", "3")
    assert data["params"] == {"n": 3}
    code, data = run_json(capsys, "identity", "list")
    assert {r["name"] for r in data["identities"]} >= {"depth1", "dihedral", "descent", "goal", "theorem1", "pushdown39", "assemble-theorem1"}
    code, data = run_json(capsys, "identity", "show", "assemble-theorem1", "--k", "3")
    assert code == 0 and data["name"] == "assemble-theorem1"


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "z(1"],
        ["eval", "z(0)"],
        ["identity", "show"],
        ["identity", "show", "dihedral", "--k", "1"],
        ["verify", "nosuch"],
        ["frobnicate"],
        ["coaction", "z(2)", "--r", "0"],
        ["eval", "z(2)", "--digits", "5", "--no-cache"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_cache_commands(capsys, cache_dir):
    run(capsys, "eval", "z(3,-3)", "--digits", "15", "--cache-dir", str(cache_dir))
    code, data = run_json(capsys, "cache", "stats", "--dir", str(cache_dir))
    assert code == 0 and data["entries"] == 1
    assert run(capsys, "cache", "clear", "--dir", str(cache_dir))[0] == 0
    code, data = run_json(capsys, "cache", "stats", "--dir", str(cache_dir))
    assert data["entries"] == 0


def test_text_and_json_agree_on_verdicts(capsys):
    for argv in (["verify", "depth1", "--n", "4"], ["verify", "dihedral", "--k", "1", "--l", "2"], ["verify", "goal", "--k", "2"]):
        code_t, out, _ = run(capsys, *argv, "--digits", "20", "--no-cache")
        code_j, data = run_json(capsys, *argv, "--digits", "20", "--no-cache")
        assert code_t == code_j
        assert out.startswith("PASS") == data["pass"]


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "eulersums.cli", "identity", "list"], capture_output=True, text=True)
    assert proc.returncode == 0 and "theorem1" in proc.stdout
