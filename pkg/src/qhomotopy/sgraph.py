"""Signed multigraphs, weighted simple graphs and the combinatorics on them.

Edges are identified by their position in ``edges`` (stable edge ids).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

__all__ = [
    "SignedMultigraph",
    "WeightedGraph",
    "EdgeOrder",
    "Activity",
    "UnionFind",
    "component_count",
    "cyclomatic_number",
    "simplify_to_weighted",
    "double",
    "reduce",
    "contract_edges",
    "enumerate_forests",
    "enumerate_spanning_trees",
    "classify_activity",
    "forest_external_inactive",
    "components",
    "canonical_key",
    "load_graph",
    "dump_graph",
]


class UnionFind:
    """Union-find with rollback (union by size, no path compression)."""

    __slots__ = ("parent", "size", "history")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.history: list[tuple[int, int] | None] = []

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            self.history.append(None)
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.history.append((ra, rb))
        return True

    def undo(self) -> None:
        op = self.history.pop()
        if op is not None:
            ra, rb = op
            self.parent[rb] = rb
            self.size[ra] -= self.size[rb]


def component_count(n: int, edges: Sequence[tuple]) -> int:
    """p0: number of connected components of the graph on ``n`` vertices."""
    uf = UnionFind(n)
    merged = sum(uf.union(e[0], e[1]) for e in edges)
    return n - merged


def cyclomatic_number(n: int, edges: Sequence[tuple]) -> int:
    """p1 = |E| - |V| + p0."""
    return len(edges) - n + component_count(n, edges)


@dataclass(frozen=True)
class SignedMultigraph:
    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]
    # pairs of edge ids produced by ``double``; None for ordinary graphs
    pairing: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self):
        edges = tuple((int(u), int(v), int(s)) for u, v, s in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        for u, v, s in edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{self.vertex_count - 1}")
            if s not in (1, -1):
                raise ValueError(f"edge sign must be +1 or -1, got {s}")
        if self.pairing is not None:
            pairing = tuple((int(a), int(b)) for a, b in self.pairing)
            object.__setattr__(self, "pairing", pairing)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def p0(self) -> int:
        return component_count(self.vertex_count, self.edges)

    def p1(self) -> int:
        return cyclomatic_number(self.vertex_count, self.edges)


@dataclass(frozen=True)
class WeightedGraph:
    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        seen = set()
        kept = []
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        for u, v, w in self.edges:
            u, v, w = int(u), int(v), int(w)
            if u == v:
                raise ValueError(f"weighted graphs have no loops (vertex {u})")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{self.vertex_count - 1}")
            a, b = min(u, v), max(u, v)
            if (a, b) in seen:
                raise ValueError(f"parallel edge between {a} and {b}")
            seen.add((a, b))
            if w:
                kept.append((a, b, w))
        object.__setattr__(self, "edges", tuple(kept))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def p0(self) -> int:
        return component_count(self.vertex_count, self.edges)

    def p1(self) -> int:
        return cyclomatic_number(self.vertex_count, self.edges)

    def is_connected(self) -> bool:
        return self.vertex_count <= 1 or self.p0() == 1


@dataclass(frozen=True)
class EdgeOrder:
    """A strict total order on edge ids, listed smallest first."""

    sequence: tuple[int, ...]
    rank: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        seq = tuple(int(e) for e in self.sequence)
        if sorted(seq) != list(range(len(seq))):
            raise ValueError("edge order must be a permutation of 0..m-1")
        rank = [0] * len(seq)
        for pos, e in enumerate(seq):
            rank[e] = pos
        object.__setattr__(self, "sequence", seq)
        object.__setattr__(self, "rank", tuple(rank))

    def __len__(self):
        return len(self.sequence)

    @classmethod
    def identity(cls, m: int) -> "EdgeOrder":
        return cls(tuple(range(m)))

    @classmethod
    def lex(cls, g) -> "EdgeOrder":
        """Lexicographic on (min endpoint, max endpoint), ties by edge id."""
        keyed = sorted(range(len(g.edges)), key=lambda i: (min(g.edges[i][:2]), max(g.edges[i][:2]), i))
        return cls(tuple(keyed))

    @classmethod
    def random(cls, m: int, rng: random.Random) -> "EdgeOrder":
        seq = list(range(m))
        rng.shuffle(seq)
        return cls(tuple(seq))

    @classmethod
    def from_spec(cls, spec: str, g) -> "EdgeOrder":
        """Parse ``lex``, ``id`` or ``random:SEED``."""
        if spec == "lex":
            return cls.lex(g)
        if spec == "id":
            return cls.identity(len(g.edges))
        if spec.startswith("random:"):
            try:
                seed = int(spec.split(":", 1)[1])
            except ValueError:
                raise ValueError(f"bad random order seed in {spec!r}") from None
            return cls.random(len(g.edges), random.Random(seed))
        raise ValueError(f"unknown edge order {spec!r}")

    def restrict(self, edge_ids: Sequence[int]) -> "EdgeOrder":
        """Induced order on a subset, re-indexed to positions in ``edge_ids``."""
        index = {e: i for i, e in enumerate(edge_ids)}
        return EdgeOrder(tuple(index[e] for e in self.sequence if e in index))


# ----------------------------------------------------------------------
# structural operations


def simplify_to_weighted(g: SignedMultigraph) -> WeightedGraph:
    """Drop loops and merge parallel classes into one edge weighted by the sign sum."""
    weights: dict[tuple[int, int], int] = {}
    for u, v, s in g.edges:
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        weights[key] = weights.get(key, 0) + s
    return WeightedGraph(g.vertex_count, tuple((u, v, w) for (u, v), w in weights.items() if w))


def double(g: SignedMultigraph) -> SignedMultigraph:
    """Replace each edge ``i`` by copies ``2i`` and ``2i+1`` of the same sign."""
    edges = []
    for e in g.edges:
        edges.extend((e, e))
    pairing = tuple((2 * i, 2 * i + 1) for i in range(len(g.edges)))
    return SignedMultigraph(g.vertex_count, tuple(edges), pairing)


def _merge_map(n: int, u: int, v: int) -> list[int]:
    # merged vertex takes the smaller id, ids above the larger one shift down
    a, b = min(u, v), max(u, v)
    relabel = []
    for x in range(n):
        if x == b:
            relabel.append(a)
        elif x > b:
            relabel.append(x - 1)
        else:
            relabel.append(x)
    return relabel


def contract_edges(n: int, edges: Sequence[tuple[int, int, int]], u: int, v: int):
    """Identify vertices ``u`` and ``v``; returns ``(n - 1, relabelled edges)``.

    Edge labels (sign or weight) are carried through untouched; loops and
    parallels are kept. Callers decide how to simplify.
    """
    relabel = _merge_map(n, u, v)
    return n - 1, [(relabel[a], relabel[b], w) for a, b, w in edges]


def reduce(g: WeightedGraph, e: int) -> tuple[WeightedGraph, WeightedGraph]:
    """Deletion ``g - e`` and contraction ``g / e`` of a weighted graph."""
    if not (0 <= e < len(g.edges)):
        raise IndexError(f"unknown edge id {e}")
    rest = g.edges[:e] + g.edges[e + 1:]
    deleted = WeightedGraph(g.vertex_count, rest)
    u, v, _ = g.edges[e]
    n, moved = contract_edges(g.vertex_count, rest, u, v)
    merged: dict[tuple[int, int], int] = {}
    for a, b, w in moved:
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        merged[key] = merged.get(key, 0) + w
    contracted = WeightedGraph(n, tuple((a, b, w) for (a, b), w in merged.items() if w))
    return deleted, contracted


def components(n: int, edges: Sequence[tuple]) -> list[list[int]]:
    """Vertex sets of connected components, each sorted, ordered by smallest vertex."""
    uf = UnionFind(n)
    for e in edges:
        uf.union(e[0], e[1])
    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(uf.find(x), []).append(x)
    return sorted(groups.values(), key=lambda c: c[0])


# ----------------------------------------------------------------------
# enumeration


def enumerate_forests(g) -> Iterator[tuple[int, ...]]:
    """All acyclic edge subsets, in lexicographic order of sorted id tuples."""
    edges = g.edges
    m = len(edges)
    uf = UnionFind(g.vertex_count)
    chosen: list[int] = []

    def rec(start: int):
        yield tuple(chosen)
        for i in range(start, m):
            u, v = edges[i][0], edges[i][1]
            if uf.find(u) == uf.find(v):
                continue
            uf.union(u, v)
            chosen.append(i)
            yield from rec(i + 1)
            chosen.pop()
            uf.undo()

    yield from rec(0)


def enumerate_spanning_trees(g) -> Iterator[tuple[int, ...]]:
    """All spanning trees of a connected graph, lexicographic order."""
    n = g.vertex_count
    if n > 1 and component_count(n, g.edges) != 1:
        raise ValueError("spanning trees requested for a disconnected graph")
    edges = g.edges
    m = len(edges)
    need = max(n - 1, 0)
    uf = UnionFind(n)
    chosen: list[int] = []

    def rec(start: int):
        if len(chosen) == need:
            yield tuple(chosen)
            return
        for i in range(start, m - (need - len(chosen)) + 1):
            u, v = edges[i][0], edges[i][1]
            if uf.find(u) == uf.find(v):
                continue
            uf.union(u, v)
            chosen.append(i)
            yield from rec(i + 1)
            chosen.pop()
            uf.undo()

    yield from rec(0)


# ----------------------------------------------------------------------
# activities


@dataclass(frozen=True)
class Activity:
    IA: frozenset[int]
    II: frozenset[int]
    EA: frozenset[int]
    EI: frozenset[int]

    def label(self, e: int) -> str:
        for name in ("IA", "II", "EA", "EI"):
            if e in getattr(self, name):
                return name
        raise KeyError(e)


def _forest_path(n: int, edges, forest: Sequence[int], src: int, dst: int) -> list[int] | None:
    """Edge ids on the forest path from ``src`` to ``dst`` (None if disconnected)."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for i in forest:
        u, v = edges[i][0], edges[i][1]
        adj.setdefault(u, []).append((v, i))
        adj.setdefault(v, []).append((u, i))
    back: dict[int, tuple[int, int] | None] = {src: None}
    stack = [src]
    while stack:
        x = stack.pop()
        if x == dst:
            break
        for y, i in adj.get(x, ()):
            if y not in back:
                back[y] = (x, i)
                stack.append(y)
    if dst not in back:
        return None
    path = []
    x = dst
    while back[x] is not None:
        x, i = back[x]
        path.append(i)
    return path


def _check_order(g, order: EdgeOrder) -> None:
    if len(order) != len(g.edges):
        raise ValueError(f"edge order has {len(order)} entries for {len(g.edges)} edges")


def classify_activity(g, order: EdgeOrder, tree: Sequence[int]) -> Activity:
    """Split edges into internally/externally active/inactive w.r.t. a spanning tree."""
    _check_order(g, order)
    n = g.vertex_count
    tree_set = set(tree)
    if len(tree_set) != max(n - 1, 0) or component_count(n, [g.edges[i] for i in tree_set]) != min(n, 1):
        raise ValueError("not a spanning tree")
    rank = order.rank
    edges = g.edges
    ia, ii, ea, ei = set(), set(), set(), set()
    for e in range(len(edges)):
        if e in tree_set:
            uf = UnionFind(n)
            for i in tree_set:
                if i != e:
                    uf.union(edges[i][0], edges[i][1])
            cut = [
                j for j in range(len(edges))
                if j != e and uf.find(edges[j][0]) != uf.find(edges[j][1])
            ]
            (ia if all(rank[e] < rank[j] for j in cut) else ii).add(e)
        else:
            u, v = edges[e][0], edges[e][1]
            cycle = [] if u == v else _forest_path(n, edges, tuple(tree_set), u, v)
            (ea if all(rank[e] < rank[j] for j in cycle) else ei).add(e)
    return Activity(frozenset(ia), frozenset(ii), frozenset(ea), frozenset(ei))


def forest_external_inactive(g, order: EdgeOrder, forest: Sequence[int]) -> frozenset[int]:
    """Edges outside the forest that either extend it or are not first on their cycle."""
    _check_order(g, order)
    n = g.vertex_count
    edges = g.edges
    fset = set(forest)
    if component_count(n, [edges[i] for i in fset]) != n - len(fset):
        raise ValueError("edge subset is not a forest")
    rank = order.rank
    uf = UnionFind(n)
    for i in fset:
        uf.union(edges[i][0], edges[i][1])
    out = set()
    for e in range(len(edges)):
        if e in fset:
            continue
        u, v = edges[e][0], edges[e][1]
        if uf.find(u) != uf.find(v):
            out.add(e)
            continue
        cycle = [] if u == v else _forest_path(n, edges, tuple(fset), u, v)
        if any(rank[j] < rank[e] for j in cycle):
            out.add(e)
    return frozenset(out)


# ----------------------------------------------------------------------
# canonical form (cache keys)


def canonical_key(n: int, edges: Sequence[tuple[int, int, int]]):
    """Relabel vertices by a degree refinement and sort the edge multiset.

    Two graphs with equal keys are isomorphic (the key is a relabelled copy),
    so the key is safe for caching isomorphism-invariant values. Isomorphic
    graphs do not always get equal keys.
    """
    deg = [0] * n
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v, _ in edges:
        deg[u] += 1
        deg[v] += 1
        nbrs[u].append(v)
        nbrs[v].append(u)
    sig = [(deg[x], tuple(sorted(deg[y] for y in nbrs[x]))) for x in range(n)]
    perm = sorted(range(n), key=lambda x: sig[x])
    new = [0] * n
    for pos, x in enumerate(perm):
        new[x] = pos
    out = []
    for u, v, w in edges:
        a, b = new[u], new[v]
        out.append((a, b, w) if a <= b else (b, a, w))
    out.sort()
    return n, tuple(out)


# ----------------------------------------------------------------------
# JSON


def load_graph(data: dict | str, kind: str | None = None):
    """Read the JSON graph schema.

    Signed edges carry ``sign``, weighted edges carry ``weight``. ``kind`` forces
    one reading; otherwise it is inferred from the edge records.
    """
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise ValueError("graph JSON needs 'vertices' and 'edges'")
    n = data["vertices"]
    raw = data["edges"]
    if not isinstance(n, int) or not isinstance(raw, list):
        raise ValueError("graph JSON: 'vertices' must be an int and 'edges' a list")
    if kind is None:
        if raw and all("weight" in e for e in raw):
            kind = "weighted"
        else:
            kind = "signed"
    label = {"signed": "sign", "weighted": "weight"}[kind]
    try:
        triples = tuple((e["u"], e["v"], e[label]) for e in raw)
    except (KeyError, TypeError):
        raise ValueError(f"graph JSON: every edge needs integer 'u', 'v' and '{label}'") from None
    if kind == "signed":
        return SignedMultigraph(n, triples)
    return WeightedGraph(n, triples)


def dump_graph(g) -> dict:
    label = "sign" if isinstance(g, SignedMultigraph) else "weight"
    return {
        "vertices": g.vertex_count,
        "edges": [{"u": u, "v": v, label: w} for u, v, w in g.edges],
    }
