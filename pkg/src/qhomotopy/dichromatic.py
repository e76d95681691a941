"""Dichromatic polynomials R (signed), R1 (weighted) and R2 (doubled).

Every function returns an :class:`HPoly`; the recursions, the state sum and
the two activity expansions are independent routes to the same value.
"""

from __future__ import annotations

import random
from collections import Counter
from functools import lru_cache

from .polyring import HPoly, QLaurent, qbracket2
from .sgraph import (
    EdgeOrder,
    SignedMultigraph,
    UnionFind,
    WeightedGraph,
    canonical_key,
    classify_activity,
    components,
    contract_edges,
    enumerate_forests,
    enumerate_spanning_trees,
    forest_external_inactive,
)

__all__ = [
    "STATESUM_MAX_EDGES",
    "R_recursive",
    "R_statesum",
    "R1_recursive",
    "R1_tree_expansion",
    "R1_forest_expansion",
    "R2_recursive",
    "clear_caches",
]

STATESUM_MAX_EDGES = 30

_T = HPoly.monomial(t=1)
_Z = HPoly.monomial(z=1)
_Q2 = HPoly.monomial(q=2)
_QINV2 = HPoly.monomial(q=-2)
_QZ = HPoly.monomial(q=1, z=1)
_NEG_QINV_Z = HPoly.monomial(-1, q=-1, z=1)


def _t_power(n: int) -> HPoly:
    return HPoly.monomial(t=n)


def _skein_step(sign: int, deleted: HPoly, contracted: HPoly) -> HPoly:
    if sign > 0:
        return _Q2 * deleted + _QZ * contracted
    return _QINV2 * deleted + _NEG_QINV_Z * contracted


# ----------------------------------------------------------------------
# R on signed multigraphs


def _contract_signed(n, edges, u, v):
    n2, moved = contract_edges(n, edges, u, v)
    return n2, tuple(sorted((min(a, b), max(a, b), s) for a, b, s in moved if a != b))


@lru_cache(maxsize=200_000)
def _R_cached(n: int, edges: tuple) -> HPoly:
    # edges: sorted, loop-free, (u <= v, sign)
    if not edges:
        return _t_power(n)
    u, v, s = edges[0]
    rest = edges[1:]
    deleted = _R_cached(*canonical_key(n, rest))
    contracted = _R_cached(*canonical_key(*_contract_signed(n, rest, u, v)))
    return _skein_step(s, deleted, contracted)


def _R_plain(n: int, edges: list, pick) -> HPoly:
    if not edges:
        return _t_power(n)
    i = pick(len(edges))
    u, v, s = edges[i]
    rest = edges[:i] + edges[i + 1:]
    if u == v:
        return _R_plain(n, rest, pick)
    deleted = _R_plain(n, rest, pick)
    n2, moved = contract_edges(n, rest, u, v)
    return _skein_step(s, deleted, _R_plain(n2, moved, pick))


def R_recursive(g: SignedMultigraph, pivot: str = "first", rng: random.Random | None = None) -> HPoly:
    """Deletion-contraction on a signed multigraph.

    ``pivot`` is ``first`` (lowest edge id, cached on canonical minors),
    ``last`` or ``random`` (uncached; for checking pivot independence).
    """
    if pivot == "first":
        edges = [(min(u, v), max(u, v), s) for u, v, s in g.edges if u != v]
        return _R_cached(*canonical_key(g.vertex_count, edges))
    if pivot == "last":
        pick = lambda m: m - 1  # noqa: E731
    elif pivot == "random":
        rng = rng or random.Random(0)
        pick = rng.randrange
    else:
        raise ValueError(f"unknown pivot strategy {pivot!r}")
    return _R_plain(g.vertex_count, list(g.edges), pick)


def R_statesum(g: SignedMultigraph) -> HPoly:
    """Sum over all 2^|E| spanning subgraphs (the state model)."""
    edges = g.edges
    m = len(edges)
    if m > STATESUM_MAX_EDGES:
        raise ValueError(f"state sum limited to {STATESUM_MAX_EDGES} edges, graph has {m}")
    n = g.vertex_count
    pos_total = sum(1 for e in edges if e[2] > 0)
    neg_total = m - pos_total
    uf = UnionFind(n)
    # (p0, p1, |S|, |S|+, |S|-) -> number of subsets
    tally: Counter = Counter()

    def rec(i: int, merged: int, size: int, spos: int):
        if i == m:
            p0 = n - merged
            p1 = size - merged
            tally[(p0, p1, size, spos, size - spos)] += 1
            return
        rec(i + 1, merged, size, spos)
        u, v, s = edges[i]
        joined = uf.union(u, v)
        rec(i + 1, merged + joined, size + 1, spos + (s > 0))
        uf.undo()

    rec(0, 0, 0, 0)

    base = QLaurent.q(-1) - QLaurent.q(1)
    total = HPoly.zero()
    for (p0, p1, size, spos, sneg), count in tally.items():
        rest_pos = pos_total - spos
        rest_neg = neg_total - sneg
        qexp = 2 * (rest_pos - rest_neg) + spos - sneg
        sign = -1 if sneg % 2 else 1
        coeff = base ** p1 * QLaurent.q(qexp, sign * count)
        total = total + HPoly.lift(coeff, t=p0, z=size - p1)
    return total


# ----------------------------------------------------------------------
# R1 on weighted graphs


def _merge_weighted(n, edges, u, v):
    n2, moved = contract_edges(n, edges, u, v)
    merged: dict = {}
    for a, b, w in moved:
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        merged[key] = merged.get(key, 0) + w
    return n2, [(a, b, w) for (a, b), w in merged.items() if w]


@lru_cache(maxsize=200_000)
def _R1_cached(n: int, edges: tuple) -> HPoly:
    if not edges:
        return _t_power(n)
    u, v, w = edges[0]
    rest = edges[1:]
    deleted = _R1_cached(*canonical_key(n, rest))
    contracted = _R1_cached(*canonical_key(*_merge_weighted(n, rest, u, v)))
    return HPoly.monomial(q=2 * w) * deleted + HPoly.lift(qbracket2(w), z=1) * contracted


def R1_recursive(g: WeightedGraph) -> HPoly:
    """Weighted deletion-contraction with weight-summing contraction."""
    return _R1_cached(*canonical_key(g.vertex_count, g.edges))


def _tree_sum_connected(g: WeightedGraph, order: EdgeOrder) -> HPoly:
    total = HPoly.zero()
    weights = [w for _, _, w in g.edges]
    for tree in enumerate_spanning_trees(g):
        act = classify_activity(g, order, tree)
        term = _T
        for e in act.EI:
            term = term * HPoly.monomial(q=2 * weights[e])
        for e in act.II:
            term = term * HPoly.lift(qbracket2(weights[e]), z=1)
        for e in act.IA:
            term = term * (HPoly.monomial(q=2 * weights[e], t=1) + HPoly.lift(qbracket2(weights[e]), z=1))
        total = total + term
    return total


def R1_tree_expansion(g: WeightedGraph, order: EdgeOrder) -> HPoly:
    """Spanning-tree activity expansion; disconnected graphs multiply over components."""
    if len(order) != len(g.edges):
        raise ValueError("edge order does not match the graph")
    result = HPoly.one()
    for verts in components(g.vertex_count, g.edges):
        index = {x: i for i, x in enumerate(verts)}
        ids = [i for i, (u, _, _) in enumerate(g.edges) if u in index]
        sub = WeightedGraph(len(verts), tuple((index[g.edges[i][0]], index[g.edges[i][1]], g.edges[i][2]) for i in ids))
        result = result * _tree_sum_connected(sub, order.restrict(ids))
    return result


def R1_forest_expansion(g: WeightedGraph, order: EdgeOrder) -> HPoly:
    """Forest expansion weighted by externally inactive edges."""
    if len(order) != len(g.edges):
        raise ValueError("edge order does not match the graph")
    n = g.vertex_count
    weights = [w for _, _, w in g.edges]
    total = HPoly.zero()
    for forest in enumerate_forests(g):
        inactive = forest_external_inactive(g, order, forest)
        coeff = QLaurent.q(2 * sum(weights[e] for e in inactive))
        for e in forest:
            coeff = coeff * qbracket2(weights[e])
        total = total + HPoly.lift(coeff, t=n - len(forest), z=len(forest))
    return total


# ----------------------------------------------------------------------
# R2 on doubled graphs


def _pairs_of(g2: SignedMultigraph) -> list[tuple[int, int, int, int]]:
    if g2.pairing is None:
        raise ValueError("R2 needs a doubled graph (no edge pairing recorded)")
    used: set[int] = set()
    pairs = []
    for a, b in g2.pairing:
        if a == b or a in used or b in used or not (0 <= a < len(g2.edges)) or not (0 <= b < len(g2.edges)):
            raise ValueError("edge pairing is not a perfect matching of the edges")
        used.update((a, b))
        ua, va, sa = g2.edges[a]
        ub, vb, sb = g2.edges[b]
        if {ua, va} != {ub, vb}:
            raise ValueError(f"paired edges {a} and {b} are not parallel")
        pairs.append((min(ua, va), max(ua, va), sa, sb))
    if len(used) != len(g2.edges):
        raise ValueError("edge pairing does not cover every edge")
    return pairs


@lru_cache(maxsize=200_000)
def _R2_cached(n: int, pairs: tuple) -> HPoly:
    live = []
    for u, v, s1, s2 in pairs:
        if u == v or s1 != s2:
            continue  # loops and opposite-sign pairs drop out
        live.append((u, v, s1))
    if not live:
        return _t_power(n)
    u, v, s = live[0]
    rest = live[1:]
    # flipping one copy leaves an opposite-sign pair, which cancels
    flipped = _R2_cached(*_encode_pairs(n, rest))
    # the partner copy becomes a loop and drops out with the other new loops
    n2, moved = contract_edges(n, rest, u, v)
    contracted = _R2_cached(*_encode_pairs(n2, moved))
    return HPoly.monomial(q=2 * s) * flipped + HPoly.monomial(s, q=s, z=1) * contracted


def R2_recursive(g2: SignedMultigraph) -> HPoly:
    """Sign-flip recursion on a graph produced by :func:`~qhomotopy.sgraph.double`."""
    pairs = _pairs_of(g2)
    # cache works on same-sign pairs encoded as single signed edges
    live = [(u, v, s1) for u, v, s1, s2 in pairs if u != v and s1 == s2]
    return _R2_cached(*_encode_pairs(g2.vertex_count, live))


def _encode_pairs(n, live):
    key_n, key_edges = canonical_key(n, live)
    return key_n, tuple((u, v, s, s) for u, v, s in key_edges)


def clear_caches() -> None:
    _R_cached.cache_clear()
    _R1_cached.cache_clear()
    _R2_cached.cache_clear()
