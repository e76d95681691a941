import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from qhomotopy.cli import run

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "fixtures" / "golden"
CASES = json.loads((GOLDEN / "commands.json").read_text())


@pytest.fixture(autouse=True)
def _repo_root(monkeypatch):
    monkeypatch.chdir(ROOT)


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), out, err)
    return status, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_outputs(name):
    status, out, _ = call(*CASES[name])
    assert f"exit {status}\n{out}" == (GOLDEN / f"{name}.txt").read_text()


def test_output_is_deterministic():
    for argv in (CASES["verify_batch"], CASES["qlie_jacobi"], CASES["graphpoly_triangle_tree"]):
        assert call(*argv) == call(*argv)


def test_hp_printed_forms():
    assert call("hp", "--matrix", "fixtures/l2.json")[1].strip() == (
        "q^6 t^3 + (q + 2 q^3 + 2 q^5 - q^7 - q^9) t^2 z - (q^4 + 2 q^6 + q^8) t z^2"
    )
    assert call("hp", "--matrix", "fixtures/zero3.json")[1] == "t^3\n"


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["hp"],
        ["hp", "--matrix", "missing.json"],
        ["hp", "--matrix", "fixtures/l2.json", "--method", "magic"],
        ["graphpoly", "--signed", "fixtures/theta_signed.json", "--method", "tree"],
        ["graphpoly", "--weighted", "fixtures/triangle_weighted.json", "--method", "statesum"],
        ["graphpoly", "--signed", "fixtures/theta_signed.json", "--weighted", "fixtures/triangle_weighted.json"],
        ["graphpoly", "--weighted", "fixtures/triangle_weighted.json", "--method", "tree", "--order", "spiral"],
        ["recover", "--hp", "q^2 x"],
        ["recover", "--hp", "q t^2"],
        ["recover", "--w1", "q"],
        ["recover", "--hp", "t^2", "--w1", "q", "--lk", "0"],
        ["convert", "--p", "v z^-1 + v z", "--components", "2", "--to", "dichromatic"],
        ["convert", "--r", "q^2 t^2", "--components", "2", "--to", "dichromatic"],
        ["convert", "--r", "q^2 t^2", "--components", "0", "--to", "homflypt"],
        ["qlie", "--form", "fixtures/form2.json", "--bracket", "1,0"],
        ["qlie", "--form", "fixtures/form2.json", "--bracket", "1,0,0;0,1"],
        ["qlie", "--form", "fixtures/form2.json", "--bracket", "a;b"],
        ["qlie", "--form", "fixtures/l2.json", "--jacobi"],
        ["verify"],
        ["selftest", "--extra"],
    ],
)
def test_bad_input_exits_2_with_one_line(argv):
    status, out, err = call(*argv)
    assert status == 2
    assert out == ""
    assert err.startswith("qhs: error: ")
    assert err.count("\n") == 1


def test_invalid_json_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    status, _, err = call("hp", "--matrix", str(bad))
    assert status == 2 and "invalid JSON" in err
    asym = tmp_path / "asym.json"
    asym.write_text('{"n": 2, "matrix": [[0, 1], [2, 0]]}')
    status, _, err = call("hp", "--matrix", str(asym))
    assert status == 2 and "symmetric" in err


def test_verify_graph_and_json(tmp_path):
    status, out, _ = call("verify", "--graph", "fixtures/theta_signed.json", "--json")
    assert status == 0 and json.loads(out)["passed"]
    status, out, _ = call("verify", "--batch", "--seed", "2", "--count", "3", "--out", str(tmp_path))
    assert status == 0
    assert json.loads((tmp_path / "report.json").read_text()) == json.loads(out)


def test_verify_failure_exits_1(monkeypatch):
    import qhomotopy.cli as cli

    monkeypatch.setattr(cli, "check_matrix", lambda m, seed=0: [("forced", False)])
    status, out, _ = call("verify", "--matrix", "fixtures/l2.json")
    assert status == 1 and out == "FAIL forced\n"


def test_hp_q1_and_graph_agree():
    flat = call("hp", "--matrix", "fixtures/l1.json", "--flat")[1]
    graph = call("hp", "--matrix", "fixtures/l1.json", "--flat", "--method", "graph")[1]
    assert flat == graph


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qhomotopy", "hp", "--matrix", "fixtures/zero3.json"],
        cwd=ROOT, capture_output=True, text=True, check=False,
    )
    assert (proc.returncode, proc.stdout) == (0, "t^3\n")
    proc = subprocess.run(
        [sys.executable, "-m", "qhomotopy", "recover", "--hp", "q^"],
        cwd=ROOT, capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 2 and proc.stderr.count("\n") == 1
