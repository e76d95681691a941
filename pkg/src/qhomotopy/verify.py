"""Cross-oracle checks: every independent route to the same polynomial must agree."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

from .dichromatic import (
    STATESUM_MAX_EDGES,
    R1_forest_expansion,
    R1_recursive,
    R1_tree_expansion,
    R2_recursive,
    R_recursive,
    R_statesum,
)
from .homfly import homflypt_to_r, r_to_homflypt
from .linkhp import (
    LinkingMatrix,
    coefficient_w,
    graph_of_link,
    homotopy_polynomial,
    hp_q1,
    hp_via_dichromatic,
    mirror,
)
from .polyring import HPoly, QLaurent, render, substitute_q
from .sgraph import EdgeOrder, SignedMultigraph, double, dump_graph, simplify_to_weighted
from .youngdual import recover_linking, unimodal_check, w1_from_linking

__all__ = [
    "Oracle",
    "GRAPH_ORACLES",
    "MATRIX_ORACLES",
    "DEFAULT_ORACLES",
    "random_linking_matrix",
    "random_signed_graph",
    "check_matrix",
    "check_graph",
    "batch_verify",
]


@dataclass(frozen=True)
class Oracle:
    """Two routes that must give equal values on an input of the given kind."""

    name: str
    kind: str  # "matrix" or "graph"
    left: Callable[[Any, random.Random], Any]
    right: Callable[[Any, random.Random], Any]


def random_linking_matrix(rng: random.Random, max_n: int = 5, bound: int = 4, min_n: int = 0) -> LinkingMatrix:
    n = rng.randint(min_n, max_n)
    return LinkingMatrix.from_pairs(n, {(i, j): rng.randint(-bound, bound) for i in range(n) for j in range(i + 1, n)})


def random_signed_graph(rng: random.Random, max_vertices: int = 6, max_edges: int = 8) -> SignedMultigraph:
    n = rng.randint(1, max_vertices)
    m = rng.randint(0, max_edges)
    edges = tuple((rng.randrange(n), rng.randrange(n), rng.choice((1, -1))) for _ in range(m))
    return SignedMultigraph(n, edges)


# ----------------------------------------------------------------------
# graph oracles


def _random_orders(g, rng: random.Random, k: int = 3) -> list[EdgeOrder]:
    return [EdgeOrder.random(len(g.edges), rng) for _ in range(k)]


def _tree_all_orders(g: SignedMultigraph, rng: random.Random):
    w = simplify_to_weighted(g)
    return [R1_tree_expansion(w, o) for o in _random_orders(w, rng)]


def _forest_all_orders(g: SignedMultigraph, rng: random.Random):
    w = simplify_to_weighted(g)
    return [R1_forest_expansion(w, o) for o in _random_orders(w, rng)]


GRAPH_ORACLES = [
    Oracle("R_recursive=R_statesum", "graph", lambda g, _: R_recursive(g), lambda g, _: R_statesum(g)),
    Oracle("R_recursive=R1_recursive(simplify)", "graph", lambda g, _: R_recursive(g),
           lambda g, _: R1_recursive(simplify_to_weighted(g))),
    Oracle("R_recursive=R2_recursive(double)", "graph", lambda g, _: R_recursive(g),
           lambda g, _: R2_recursive(double(g))),
    Oracle("R_recursive=R1_tree_expansion", "graph", lambda g, _: [R_recursive(g)] * 3, _tree_all_orders),
    Oracle("R_recursive=R1_forest_expansion", "graph", lambda g, _: [R_recursive(g)] * 3, _forest_all_orders),
    Oracle("R_recursive(first)=R_recursive(last,random)", "graph",
           lambda g, _: [R_recursive(g)] * 2,
           lambda g, rng: [R_recursive(g, "last"), R_recursive(g, "random", random.Random(rng.random()))]),
]


# ----------------------------------------------------------------------
# matrix oracles


def _w0_expected(m: LinkingMatrix):
    return HPoly.lift(QLaurent.q(2 * m.total_linking())) if m.n else HPoly.one()


def _leading(m: LinkingMatrix):
    hp = homotopy_polynomial(m)
    return HPoly.lift(hp.coeff(m.n, 0))


def _w1_at_one(m: LinkingMatrix):
    if m.n < 2:
        return 0
    return coefficient_w(homotopy_polynomial(m), 1).evaluate_at_one()


def _recovered(m: LinkingMatrix):
    rec = recover_linking(homotopy_polynomial(m))
    return rec.n, rec.lk, dict(rec.nonzero), rec.zero_count


def _expected_recovery(m: LinkingMatrix):
    nonzero: dict[int, int] = {}
    zeros = 0
    for _, _, v in m.pairs():
        if v:
            nonzero[v] = nonzero.get(v, 0) + 1
        else:
            zeros += 1
    return m.n, m.total_linking(), nonzero, zeros


def _w1_from_hp(m: LinkingMatrix):
    return coefficient_w(homotopy_polynomial(m), 1) if m.n >= 2 else QLaurent.zero()


def _homfly_round_trip(m: LinkingMatrix):
    if m.n == 0:
        return HPoly.one()
    r = hp_via_dichromatic(m)
    return homflypt_to_r(r_to_homflypt(r, m.n - 1), m.n - 1)


MATRIX_ORACLES = [
    Oracle("homotopy_polynomial=hp_via_dichromatic", "matrix",
           lambda m, _: homotopy_polynomial(m), lambda m, _: hp_via_dichromatic(m)),
    Oracle("w0=q^(2lk)", "matrix", lambda m, _: _leading(m), lambda m, _: _w0_expected(m)),
    Oracle("w1(1)=lk", "matrix", lambda m, _: _w1_at_one(m), lambda m, _: m.total_linking() if m.n >= 2 else 0),
    Oracle("hp_q1=substitute_q(hp,one)", "matrix",
           lambda m, _: hp_q1(m), lambda m, _: substitute_q(homotopy_polynomial(m), "one")),
    Oracle("mirror identity", "matrix",
           lambda m, _: homotopy_polynomial(mirror(m)),
           lambda m, _: substitute_q(homotopy_polynomial(m), "neg_inverse")),
    Oracle("w1_from_linking=coefficient_w(hp,1)", "matrix",
           lambda m, _: w1_from_linking(m), lambda m, _: _w1_from_hp(m)),
    Oracle("recover_linking round trip", "matrix", lambda m, _: _recovered(m), lambda m, _: _expected_recovery(m)),
    Oracle("w1 unimodal", "matrix", lambda m, _: unimodal_check(w1_from_linking(m)), lambda m, _: True),
    Oracle("homflypt round trip", "matrix", lambda m, _: _homfly_round_trip(m), lambda m, _: hp_via_dichromatic(m)),
]

DEFAULT_ORACLES = GRAPH_ORACLES + MATRIX_ORACLES


def _show(value) -> Any:
    if isinstance(value, (HPoly, QLaurent)):
        return render(value)
    if isinstance(value, list):
        return [_show(v) for v in value]
    if isinstance(value, tuple):
        return [_show(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _show(v) for k, v in sorted(value.items())}
    return value


def _run(oracle: Oracle, item, rng: random.Random):
    left = oracle.left(item, rng)
    right = oracle.right(item, rng)
    return left == right, left, right


def check_matrix(m: LinkingMatrix, seed: int = 0, oracles=None) -> list[tuple[str, bool]]:
    """Run matrix oracles plus the graph oracles on G(L) where they are affordable."""
    rng = random.Random(seed)
    results = []
    for oracle in oracles if oracles is not None else MATRIX_ORACLES:
        results.append((oracle.name, _run(oracle, m, rng)[0]))
    g = graph_of_link(m)
    if m.n and len(g.edges) <= 16:
        results.extend(check_graph(g, seed))
    elif m.n:
        # statesum and tree/forest on G1 stay cheap; skip the exponential state sum
        w = simplify_to_weighted(g)
        ref = R_recursive(g)
        results.append(("R_recursive=R1_recursive(simplify)", ref == R1_recursive(w)))
        results.append(("R_recursive=R1_tree_expansion", ref == R1_tree_expansion(w, EdgeOrder.lex(w))))
        results.append(("R_recursive=R1_forest_expansion", ref == R1_forest_expansion(w, EdgeOrder.lex(w))))
        results.append(("R_recursive=R2_recursive(double)", ref == R2_recursive(double(g))))
    return results


def check_graph(g: SignedMultigraph, seed: int = 0, oracles=None) -> list[tuple[str, bool]]:
    rng = random.Random(seed)
    results = []
    for oracle in oracles if oracles is not None else GRAPH_ORACLES:
        if oracle.name == "R_recursive=R_statesum" and len(g.edges) > STATESUM_MAX_EDGES:
            continue
        results.append((oracle.name, _run(oracle, g, rng)[0]))
    return results


def batch_verify(
    seed: int,
    count: int,
    out_dir: str | Path | None = None,
    oracles: list[Oracle] | None = None,
    max_n: int = 5,
    bound: int = 4,
) -> dict:
    """Run every oracle on ``count`` seeded random matrices and signed graphs.

    Returns a JSON-ready report; with ``out_dir`` it is also written to
    ``out_dir/report.json``.
    """
    oracles = DEFAULT_ORACLES if oracles is None else oracles
    rng = random.Random(seed)
    checked = {o.name: 0 for o in oracles}
    failures = 0
    first = None
    for index in range(count):
        m = random_linking_matrix(rng, max_n=max_n, bound=bound)
        g = random_signed_graph(rng)
        case_seed = rng.randrange(2 ** 32)
        for oracle in oracles:
            item = m if oracle.kind == "matrix" else g
            ok, left, right = _run(oracle, item, random.Random(case_seed))
            checked[oracle.name] += 1
            if not ok:
                failures += 1
                if first is None:
                    first = {
                        "oracle": oracle.name,
                        "case": index,
                        "input": m.to_json() if oracle.kind == "matrix" else dump_graph(item),
                        "left": _show(left),
                        "right": _show(right),
                    }
    report = {
        "seed": seed,
        "count": count,
        "checks": checked,
        "failures": failures,
        "first_failure": first,
        "passed": failures == 0,
    }
    if out_dir is not None:
        path = Path(out_dir)
        path.mkdir(parents=True, exist_ok=True)
        (path / "report.json").write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return report
