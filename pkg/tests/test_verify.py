import json

from qhomotopy.linkhp import LinkingMatrix
from qhomotopy.polyring import HPoly
from qhomotopy.sgraph import SignedMultigraph
from qhomotopy.verify import (
    DEFAULT_ORACLES,
    MATRIX_ORACLES,
    Oracle,
    batch_verify,
    check_graph,
    check_matrix,
)

L2 = LinkingMatrix.from_pairs(3, {(0, 1): 2, (0, 2): 3, (1, 2): -2})


def test_empty_batch_passes(tmp_path):
    report = batch_verify(seed=9, count=0, out_dir=tmp_path)
    assert report["passed"] and report["failures"] == 0 and report["first_failure"] is None
    assert all(v == 0 for v in report["checks"].values())
    assert json.loads((tmp_path / "report.json").read_text()) == report


def test_seed_one_fifty_cases():
    report = batch_verify(seed=1, count=50)
    assert report["passed"], report["first_failure"]
    assert set(report["checks"]) == {o.name for o in DEFAULT_ORACLES}
    assert all(v == 50 for v in report["checks"].values())


def test_batch_is_reproducible():
    assert batch_verify(seed=3, count=10) == batch_verify(seed=3, count=10)


def _broken(m, _):
    hp = MATRIX_ORACLES[0].left(m, _)
    # an off-by-one fault that only shows up once a link has three components
    return hp + HPoly.one() if m.n >= 3 else hp


def test_injected_fault_is_named():
    fault = Oracle("faulty formula=hp_via_dichromatic", "matrix", _broken, MATRIX_ORACLES[0].right)
    oracles = MATRIX_ORACLES[:2] + [fault] + MATRIX_ORACLES[2:]
    report = batch_verify(seed=1, count=30, oracles=oracles)
    assert not report["passed"]
    first = report["first_failure"]
    assert first["oracle"] == "faulty formula=hp_via_dichromatic"
    assert first["input"]["n"] >= 3
    assert first["left"] != first["right"]
    # every case is still checked after the first mismatch
    assert report["failures"] >= 1
    assert all(v == 30 for v in report["checks"].values())


def test_check_matrix_runs_graph_routes_too():
    names = [name for name, ok in check_matrix(L2)]
    assert all(ok for _, ok in check_matrix(L2))
    assert "R_recursive=R_statesum" in names and "recover_linking round trip" in names


def test_check_matrix_large_graph_uses_cheap_subset():
    big = LinkingMatrix.from_pairs(4, {(0, 1): 4, (0, 2): 4, (1, 3): -4, (2, 3): 3, (0, 3): 2})
    results = check_matrix(big)
    assert all(ok for _, ok in results)
    assert "R_recursive=R_statesum" not in [n for n, _ in results]


def test_check_graph():
    g = SignedMultigraph(3, ((0, 1, 1), (1, 2, -1), (0, 2, 1), (2, 2, 1)))
    assert all(ok for _, ok in check_graph(g, seed=4))
