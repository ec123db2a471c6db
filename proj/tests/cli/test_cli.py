import json
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

CLI = os.environ["SPINCHAIN_CLI"]
SCHEMAS = Path(os.environ["SPINCHAIN_SCHEMAS"])

TW3 = "0.3+0.1i,1.1-0.2i,2.0+0.05i"

COMMANDS = {
    "patterns": ["patterns", "--rep", "2,1,0"],
    "weights": ["weights", "--rep", "2,1,0", "--set", "1"],
    "lax": ["lax", "--rep", "2,1,0", "--set", "1,3", "--z", "0.3+0.2i"],
    "qop": ["qop", "--rep", "1,0,0", "--set", "2", "--length", "2", "--twist", TW3, "--z", "0.7"],
    "verify": ["verify", "det", "--rep", "1,1,0", "--length", "2", "--set", "1,2", "--twist", TW3, "--z", "0.3"],
    "ham": ["ham", "--rep", "2,0", "--length", "3", "--twist", "0.3,1.1", "--spectrum"],
    "rmat": ["rmat", "--rep", "1,1,0", "--z", "0.4-0.1i"],
    "bethe": ["bethe", "--rep", "1,0,0", "--length", "2", "--twist", TW3, "--path", "2,3,1"],
    "spectrum": ["spectrum", "--rep", "1,0", "--length", "3", "--twist", "0.3+0.1i,1.1-0.2i", "--z", "0.5"],
}


def run(args, env=None):
    full = dict(os.environ, SOURCE_DATE_EPOCH="1700000000")
    full.update(env or {})
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full)


@pytest.mark.parametrize("name", sorted(COMMANDS))
def test_output_matches_schema(name):
    p = run(COMMANDS[name])
    assert p.returncode == 0, p.stderr
    doc = json.loads(p.stdout)
    schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    jsonschema.validate(doc, schema)
    assert doc["manifest"]["timestamp"] == "2023-11-14T22:13:20Z"


@pytest.mark.parametrize("name", ["bethe", "spectrum", "qop"])
def test_identical_inputs_give_identical_bytes(name):
    a = run(COMMANDS[name], {"SPINCHAIN_THREADS": "1"})
    b = run(COMMANDS[name], {"SPINCHAIN_THREADS": "4"})
    assert a.returncode == 0 and b.returncode == 0
    assert a.stdout == b.stdout


def test_patterns_of_antifundamental():
    p = run(["patterns", "--rep", "1,1,0", "--n", "3"])
    assert p.returncode == 0
    assert len(json.loads(p.stdout)["result"]["patterns"]) == 3


def test_worked_qq_instance():
    p = run(["verify", "qq", "--rep", "1,1,0", "--n", "3", "--length", "2", "--set", "1", "--pair", "2,3",
             "--twist", "0.3,1.1,2.0", "--z", "0.7"])
    assert p.returncode == 0, p.stderr
    res = json.loads(p.stdout)["result"]
    assert res["relative"] < 1e-8
    assert res["pass"] is True


def test_comm_with_two_sets_and_two_points():
    p = run(["verify", "comm", "--rep", "2,0", "--length", "2", "--set", "1", "--set", "2",
             "--twist", "0.3+0.1i,1.1-0.2i", "--z", "0.3,-0.5+0.4i"])
    assert p.returncode == 0, p.stderr
    res = json.loads(p.stdout)["result"]
    assert res["other_set"] == [2] and len(res["z"]) == 2
    assert res["relative"] < 1e-8


def test_missing_rep_prints_usage():
    p = run(["patterns", "--n", "3"])
    assert p.returncode == 2
    assert "Usage" in p.stderr and "--rep" in p.stderr


@pytest.mark.parametrize("args", [
    ["patterns", "--rep", "1,2,0"],
    ["patterns", "--rep", "1,x"],
    ["patterns", "--rep", "1,0", "--n", "3"],
    ["qop", "--rep", "1,0", "--set", "1", "--twist", "0.3", "--z", "0.5"],
    ["qop", "--rep", "1,0", "--set", "1", "--twist", "0.3,0.3", "--z", "0.5"],
    ["patterns", "--rep", "1,0", "--bogus"],
    ["verify", "qq", "--rep", "1,0,0", "--set", "1", "--pair", "1,2", "--twist", TW3, "--z", "0.1"],
    ["bethe", "--rep", "1,0", "--length", "2", "--twist", "0.3,1.1", "--path", "1,1"],
])
def test_input_errors_exit_2(args):
    assert run(args).returncode == 2


def test_verification_failure_exits_1():
    p = run(["verify", "det", "--rep", "1,1,0", "--length", "2", "--set", "1,2", "--twist", TW3, "--z", "0.3",
             "--tolerance", "1e-300"])
    assert p.returncode == 1
    assert json.loads(p.stdout)["result"]["pass"] is False


def test_csv_has_manifest_and_one_row_per_pattern():
    p = run(["patterns", "--rep", "2,1,0", "--format", "csv"])
    assert p.returncode == 0
    lines = p.stdout.splitlines()
    assert lines[0].startswith("# manifest: ")
    assert json.loads(lines[0][len("# manifest: "):])["command"] == "patterns"
    assert lines[1].split(",")[0] == "index"
    assert len(lines) == 2 + 8


def test_out_writes_file(tmp_path):
    target = tmp_path / "r.json"
    p = run(["rmat", "--rep", "1,0", "--z", "0.4", "--out", str(target)])
    assert p.returncode == 0 and p.stdout == ""
    m = json.loads(target.read_text())["result"]["matrix"]
    # Yang R-matrix (z + P)/(z + 1) at z = 0.4: diagonal entry on |11> is 1
    assert m[0][0] == pytest.approx([1.0, 0.0])
