"""Homotopy polynomial of links in S^3 from linking matrices or braid words."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .dichromatic import R_recursive
from .polyring import HPoly, QLaurent, qbracket2, substitute_q
from .sgraph import (
    EdgeOrder,
    SignedMultigraph,
    WeightedGraph,
    enumerate_forests,
    forest_external_inactive,
)

__all__ = [
    "LinkingMatrix",
    "BraidWord",
    "braid_to_linking_matrix",
    "graph_of_link",
    "homotopy_polynomial",
    "hp_via_dichromatic",
    "hp_q1",
    "coefficient_w",
    "mirror",
    "load_matrix",
    "load_braid",
]


@dataclass(frozen=True)
class LinkingMatrix:
    """Symmetric integer matrix with zero diagonal; entry (i, j) is lk(K_i, K_j)."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"linking matrix row {i} has length {len(row)}, expected {n}")
            if row[i] != 0:
                raise ValueError(f"linking matrix has nonzero diagonal entry at ({i},{i})")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"linking matrix is not symmetric at ({i},{j})")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def zero(cls, n: int) -> "LinkingMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def from_pairs(cls, n: int, values: dict[tuple[int, int], int]) -> "LinkingMatrix":
        """Build from ``{(i, j): lk}`` with 0-based ``i < j``; missing pairs are 0."""
        m = [[0] * n for _ in range(n)]
        for (i, j), v in values.items():
            m[i][j] = m[j][i] = v
        return cls(tuple(map(tuple, m)))

    def pairs(self) -> list[tuple[int, int, int]]:
        """Upper-triangle entries ``(i, j, lk)`` in lexicographic order."""
        return [(i, j, self.entries[i][j]) for i in range(self.n) for j in range(i + 1, self.n)]

    def total_linking(self) -> int:
        return sum(v for _, _, v in self.pairs())

    def permuted(self, perm) -> "LinkingMatrix":
        return LinkingMatrix(tuple(tuple(self.entries[perm[i]][perm[j]] for j in range(self.n)) for i in range(self.n)))

    def to_json(self) -> dict:
        return {"n": self.n, "matrix": [list(r) for r in self.entries]}


@dataclass(frozen=True)
class BraidWord:
    strands: int
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(g) for g in self.word)
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for g in word:
            if g == 0 or abs(g) >= self.strands:
                raise ValueError(f"braid letter {g} out of range for {self.strands} strands")
        object.__setattr__(self, "word", word)


def braid_to_linking_matrix(b: BraidWord) -> LinkingMatrix:
    """Linking matrix of the braid closure; components ordered by first strand position."""
    at = list(range(b.strands))  # at[position] = strand starting at that position
    crossings = []
    for g in b.word:
        i = abs(g) - 1
        crossings.append((at[i], at[i + 1], 1 if g > 0 else -1))
        at[i], at[i + 1] = at[i + 1], at[i]
    end_pos = {strand: pos for pos, strand in enumerate(at)}
    comp = [-1] * b.strands
    count = 0
    for s in range(b.strands):
        if comp[s] >= 0:
            continue
        x = s
        while comp[x] < 0:
            comp[x] = count
            x = end_pos[x]
        count += 1
    twice = [[0] * count for _ in range(count)]
    for a, c, sign in crossings:
        i, j = comp[a], comp[c]
        if i != j:
            twice[i][j] += sign
            twice[j][i] += sign
    for row in twice:
        for v in row:
            if v % 2:
                raise AssertionError("odd mixed crossing count between two components")
    return LinkingMatrix(tuple(tuple(v // 2 for v in row) for row in twice))


def graph_of_link(m: LinkingMatrix) -> SignedMultigraph:
    """|lk| parallel edges of sign sign(lk) between every pair of components."""
    edges = []
    for i, j, v in m.pairs():
        sign = 1 if v > 0 else -1
        edges.extend([(i, j, sign)] * abs(v))
    return SignedMultigraph(m.n, tuple(edges))


@lru_cache(maxsize=4096)
def _qbracket2_product(values: tuple[int, ...]) -> QLaurent:
    out = QLaurent.one()
    for v in values:
        out = out * qbracket2(v)
    return out


def homotopy_polynomial(m: LinkingMatrix) -> HPoly:
    """Sum over cycle-free sets of component pairs, pairs ordered lexicographically.

    Pairs with zero linking number are left out: they contribute 0 when in the
    set and q^0 when externally inactive.
    """
    n = m.n
    if n == 0:
        return HPoly.one()
    nonzero = [(i, j, v) for i, j, v in m.pairs() if v]
    g = WeightedGraph(n, tuple(nonzero))
    order = EdgeOrder.identity(len(nonzero))  # pairs() is already lexicographic
    values = [v for _, _, v in nonzero]
    acc: dict[tuple[int, int], dict[int, int]] = {}
    for forest in enumerate_forests(g):
        inactive = forest_external_inactive(g, order, forest)
        shift = 2 * sum(values[e] for e in inactive)
        prod = _qbracket2_product(tuple(sorted(values[e] for e in forest)))
        bucket = acc.setdefault((n - len(forest), len(forest)), {})
        for k, c in prod.coeffs().items():
            bucket[k + shift] = bucket.get(k + shift, 0) + c
    return HPoly.from_coefficients({key: QLaurent.from_dict(d) for key, d in acc.items()})


def hp_via_dichromatic(m: LinkingMatrix) -> HPoly:
    """R of the signed graph G(L)."""
    if m.n == 0:
        return HPoly.one()
    return R_recursive(graph_of_link(m))


def hp_q1(m: LinkingMatrix) -> HPoly:
    """The q = 1 specialisation computed directly: sum over forests of products of lk."""
    n = m.n
    if n == 0:
        return HPoly.one()
    nonzero = [(i, j, v) for i, j, v in m.pairs() if v]
    g = WeightedGraph(n, tuple(nonzero))
    acc: dict[tuple[int, int, int], int] = {}
    for forest in enumerate_forests(g):
        prod = 1
        for e in forest:
            prod *= nonzero[e][2]
        key = (0, n - len(forest), len(forest))
        acc[key] = acc.get(key, 0) + prod
    return HPoly(acc)


def coefficient_w(p: HPoly | LinkingMatrix, k: int) -> QLaurent:
    """w_k(q): the coefficient of z^k t^(n-k)."""
    if isinstance(p, LinkingMatrix):
        n = p.n
        p = homotopy_polynomial(p)
    else:
        n = p.deg_t
    if n == 0 and k == 0:
        return p.coeff(0, 0)
    if not (0 <= k < n):
        raise IndexError(f"w_{k} undefined for a {n}-component link")
    return p.coeff(n - k, k)


def mirror(m: LinkingMatrix) -> LinkingMatrix:
    return LinkingMatrix(tuple(tuple(-x for x in row) for row in m.entries))


def mirror_identity_holds(m: LinkingMatrix) -> bool:
    return homotopy_polynomial(mirror(m)) == substitute_q(homotopy_polynomial(m), "neg_inverse")


def load_matrix(data: dict | str) -> LinkingMatrix:
    """``{"n": int, "matrix": [[...], ...]}``"""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "matrix" not in data:
        raise ValueError("matrix JSON needs a 'matrix' field")
    rows = data["matrix"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValueError("matrix JSON: 'matrix' must be a list of lists")
    if any(not isinstance(x, int) or isinstance(x, bool) for r in rows for x in r):
        raise ValueError("matrix JSON: entries must be integers")
    m = LinkingMatrix(tuple(tuple(r) for r in rows))
    if "n" in data and data["n"] != m.n:
        raise ValueError(f"matrix JSON: n={data['n']} but matrix is {m.n}x{m.n}")
    return m


def load_braid(data: dict | str) -> BraidWord:
    """``{"strands": int, "word": [int, ...]}``"""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return BraidWord(int(data["strands"]), tuple(data["word"]))
    except (KeyError, TypeError):
        raise ValueError("braid JSON needs 'strands' and 'word'") from None
