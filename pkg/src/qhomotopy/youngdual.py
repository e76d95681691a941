"""w1(q), Young-diagram duality and recovery of linking numbers from HP.

A multiset of nonzero integers is drawn as a two-sided Young diagram: a
positive ``a`` is a row of length ``a`` in the first quadrant, a negative one a
row of length ``|a|`` in the third. Column ``j`` (``j != 0``) has height
``b_j``, signed like ``j``. The sum of ``qbracket2(a)`` over the rows is
``sum_j b_j q^(2j - sgn j)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Mapping

from .linkhp import LinkingMatrix
from .polyring import HPoly, QLaurent, qbracket2

__all__ = [
    "Recovery",
    "sigma_of",
    "dual_columns",
    "to_rows",
    "w1_from_linking",
    "recover_linking",
    "recover_from_w1",
    "unimodal_check",
    "columns_from_sigma",
]


def _check_multiset(a: Mapping[int, int]) -> None:
    for k, mult in a.items():
        if k == 0:
            raise ValueError("multiset keys must be nonzero")
        if mult <= 0:
            raise ValueError(f"multiplicity of {k} must be positive")


def sigma_of(a: Mapping[int, int]) -> QLaurent:
    _check_multiset(a)
    total = QLaurent.zero()
    for value, mult in a.items():
        total = total + qbracket2(value) * mult
    return total


def dual_columns(a: Mapping[int, int]) -> dict[int, int]:
    """Column heights of the diagram whose rows are ``a``."""
    _check_multiset(a)
    cols: dict[int, int] = {}
    for value, mult in a.items():
        step = 1 if value > 0 else -1
        for j in range(step, value + step, step):
            cols[j] = cols.get(j, 0) + step * mult
    return cols


def _check_columns(c: Mapping[int, int]) -> None:
    for side in (1, -1):
        js = sorted((j for j in c if j * side > 0), key=abs)
        if js and [abs(j) for j in js] != list(range(1, len(js) + 1)):
            raise ValueError("column heights must occupy consecutive columns starting at 1 (or -1)")
        prev = None
        for j in js:
            h = c[j]
            if h * side <= 0:
                raise ValueError(f"column {j} has height {h} with the wrong sign")
            if prev is not None and abs(h) > abs(prev):
                raise ValueError(f"column heights grow at column {j}; not a Young diagram")
            prev = h
    if 0 in c:
        raise ValueError("there is no column 0")


def to_rows(c: Mapping[int, int]) -> Counter:
    """Inverse of :func:`dual_columns` (conjugate partition on each side)."""
    _check_columns(c)
    rows: Counter = Counter()
    for side in (1, -1):
        heights = [abs(c[j]) for j in sorted((j for j in c if j * side > 0), key=abs)]
        if not heights:
            continue
        for k in range(1, heights[0] + 1):
            length = sum(1 for h in heights if h >= k)
            rows[side * length] += 1
    return rows


def columns_from_sigma(sigma: QLaurent) -> dict[int, int]:
    """Read ``b_j`` off the coefficient of ``q^(2j - sgn j)``; even powers are an error."""
    cols = {}
    for k, c in sigma.coeffs().items():
        if k % 2 == 0:
            raise ValueError(f"Sigma(q) has a term in the even power q^{k}")
        j = (k + 1) // 2 if k > 0 else (k - 1) // 2
        cols[j] = c
    return cols


def w1_from_linking(m: LinkingMatrix) -> QLaurent:
    """w1 = -q^(2 lk) * Sigma of the negated nonzero linking numbers."""
    negated = Counter(-v for _, _, v in m.pairs() if v)
    return -(QLaurent.q(2 * m.total_linking()) * sigma_of(negated))


@dataclass(frozen=True)
class Recovery:
    n: int | None
    lk: int
    nonzero: Counter
    zero_count: int | None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "lk": self.lk,
            "nonzero": [[v, k] for v, k in sorted(self.nonzero.items())],
            "zeros": self.zero_count,
        }


def recover_from_w1(w1: QLaurent, lk: int, n: int | None = None) -> Recovery:
    """Decode the nonzero linking numbers from w1 and the total linking number."""
    sigma = -(QLaurent.q(-2 * lk) * w1)
    rows = to_rows(columns_from_sigma(sigma))
    nonzero = Counter({-v: k for v, k in rows.items()})
    if sum(v * k for v, k in nonzero.items()) != lk:
        raise ValueError("decoded linking numbers do not sum to lk")
    zeros = None
    if n is not None:
        zeros = comb(n, 2) - sum(nonzero.values())
        if zeros < 0:
            raise ValueError(f"more nonzero linking numbers than pairs of {n} components")
    return Recovery(n, lk, nonzero, zeros)


def recover_linking(p: HPoly) -> Recovery:
    """Component count, total linking number and the multiset of linking numbers."""
    if not p:
        raise ValueError("zero polynomial is not a homotopy polynomial")
    n = p.deg_t
    for (_, dt, dz) in p.terms:
        if dt + dz != n:
            raise ValueError(f"monomial t^{dt} z^{dz} does not have total degree {n}")
    w0 = p.coeff(n, 0)
    if len(w0) != 1 or next(iter(w0.coeffs().values())) != 1:
        raise ValueError("leading coefficient w0 is not a monic power of q")
    (k,) = w0.exponents()
    if k % 2:
        raise ValueError(f"w0 = q^{k} is an odd power of q")
    lk = k // 2
    if n == 0:
        return Recovery(0, 0, Counter(), 0)
    w1 = p.coeff(n - 1, 1) if n >= 2 else QLaurent.zero()
    return recover_from_w1(w1, lk, n)


def unimodal_check(w1: QLaurent) -> bool:
    """|coefficients| of consecutive odd powers rise weakly to a peak, then fall weakly."""
    if not w1:
        return True
    exps = w1.exponents()
    if any(k % 2 == 0 for k in exps):
        raise ValueError("w1 has a term in an even power of q")
    seq = [abs(w1.coeff(k)) for k in range(exps[0], exps[-1] + 1, 2)]
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
        i += 1
    return i == len(seq) - 1
