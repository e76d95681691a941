"""q-Lie bracket on Z[q^±1]H and q-PBW normal forms.

``H = Z^r`` with an antisymmetric integer form ``f(g, h) = g^T F h``. Letters
of tensor words are vectors in ``H``, ordered lexicographically on the negated
vector so that the basis vectors come out as e1 < e2 < ... < er. The
relation of the quantised enveloping algebra is rewritten as

    g (x) h  ->  q^(2f) h (x) g  +  z q^f [f]_q (g + h)        for g > h

with ``z`` kept formal (``env_qz``), set to 1 (``env_q``) or to 0 (``sym_q``).
Each step either swaps an adjacent inversion away or shortens the word, so
rewriting terminates.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .polyring import HPoly, QLaurent, parse, qint, render

__all__ = [
    "FormMatrix",
    "GroupAlgElem",
    "TensorWordSum",
    "DEFORMATIONS",
    "qbracket_lie",
    "jacobi_defect",
    "normal_form",
    "is_normal",
    "letter_key",
    "confluence_check",
    "twisted_product",
    "random_form",
    "random_vector",
    "load_form",
    "load_words",
    "dump_words",
]

Vector = tuple[int, ...]
Word = tuple[Vector, ...]

DEFORMATIONS = ("sym_q", "env_q", "env_qz")


@dataclass(frozen=True)
class FormMatrix:
    F: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.F)
        r = len(rows)
        for i in range(r):
            if len(rows[i]) != r:
                raise ValueError("form matrix must be square")
            for j in range(r):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError(f"form matrix is not antisymmetric at ({i},{j})")
        object.__setattr__(self, "F", rows)

    @property
    def r(self) -> int:
        return len(self.F)

    def __call__(self, g: Sequence[int], h: Sequence[int]) -> int:
        self.check(g)
        self.check(h)
        F = self.F
        return sum(g[i] * F[i][j] * h[j] for i in range(self.r) for j in range(self.r) if g[i] and h[j])

    def check(self, g: Sequence[int]) -> None:
        if len(g) != self.r:
            raise ValueError(f"vector {tuple(g)} has length {len(g)}, form has rank {self.r}")

    def pair_words(self, a: Word, b: Word) -> int:
        """f extended to words: sum over letters of a and b."""
        return sum(self(g, h) for g in a for h in b)

    def to_json(self) -> dict:
        return {"r": self.r, "F": [list(row) for row in self.F]}


def _add(g: Vector, h: Vector) -> Vector:
    return tuple(a + b for a, b in zip(g, h))


class GroupAlgElem:
    """Finite Z[q^±1]-combination of elements of H."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Vector, QLaurent] | None = None):
        self.terms = {tuple(g): c for g, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, g: Sequence[int], coeff: QLaurent | int = 1) -> "GroupAlgElem":
        c = coeff if isinstance(coeff, QLaurent) else QLaurent.constant(coeff)
        return cls({tuple(g): c})

    def __add__(self, other: "GroupAlgElem") -> "GroupAlgElem":
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, QLaurent.zero()) + c
        return GroupAlgElem(out)

    def __neg__(self):
        return GroupAlgElem({g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: QLaurent | int) -> "GroupAlgElem":
        return GroupAlgElem({g: v * c for g, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, GroupAlgElem) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"GroupAlgElem({render_group_elem(self)!r})"

    def to_json(self) -> dict:
        return {"elements": [{"coeff": render(c), "vector": list(g)} for g, c in sorted(self.terms.items())]}


def render_group_elem(x: GroupAlgElem) -> str:
    if not x.terms:
        return "0"
    parts = []
    for g, c in sorted(x.terms.items()):
        vec = "[" + ",".join(map(str, g)) + "]"
        parts.append(f"({render(c)}) {vec}")
    return " + ".join(parts)


def qbracket_lie(x: GroupAlgElem, y: GroupAlgElem, F: FormMatrix) -> GroupAlgElem:
    """Bilinear extension of [g, h]_q = [f(g, h)]_q (g + h)."""
    out: dict[Vector, QLaurent] = {}
    for g, cg in x.terms.items():
        for h, ch in y.terms.items():
            k = F(g, h)
            if not k:
                continue
            s = _add(g, h)
            out[s] = out.get(s, QLaurent.zero()) + cg * ch * qint(k)
    return GroupAlgElem(out)


def jacobi_defect(x: GroupAlgElem, y: GroupAlgElem, z: GroupAlgElem, F: FormMatrix) -> GroupAlgElem:
    return (
        qbracket_lie(x, qbracket_lie(y, z, F), F)
        + qbracket_lie(y, qbracket_lie(z, x, F), F)
        + qbracket_lie(z, qbracket_lie(x, y, F), F)
    )


# ----------------------------------------------------------------------
# tensor words


def _as_hpoly(c) -> HPoly:
    if isinstance(c, HPoly):
        return c
    if isinstance(c, QLaurent):
        return HPoly.lift(c)
    if isinstance(c, int):
        return HPoly.constant(c)
    raise TypeError(f"cannot use {type(c).__name__} as a coefficient")


class TensorWordSum:
    """Finite sum of tensor words with coefficients in Z[q^±1, z] (an HPoly without t)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Sequence[Sequence[int]], HPoly | QLaurent | int] | None = None):
        clean: dict[Word, HPoly] = {}
        for word, c in (terms or {}).items():
            c = _as_hpoly(c)
            if any(dt for (_, dt, _) in c.terms):
                raise ValueError("tensor word coefficients may not involve t")
            key = tuple(tuple(int(x) for x in g) for g in word)
            if c:
                clean[key] = clean.get(key, HPoly.zero()) + c
        self.terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def word(cls, *letters: Sequence[int], coeff=1) -> "TensorWordSum":
        return cls({tuple(tuple(g) for g in letters): coeff})

    def __add__(self, other: "TensorWordSum") -> "TensorWordSum":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, HPoly.zero()) + c
        return TensorWordSum(out)

    def __neg__(self):
        return TensorWordSum({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TensorWordSum":
        c = _as_hpoly(c)
        return TensorWordSum({w: v * c for w, v in self.terms.items()})

    def __mul__(self, other: "TensorWordSum") -> "TensorWordSum":
        """Concatenation product of the tensor algebra."""
        out: dict[Word, HPoly] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, HPoly.zero()) + c1 * c2
        return TensorWordSum(out)

    def specialize(self, var: str, value: int) -> "TensorWordSum":
        return TensorWordSum({w: c.specialize(var, value) for w, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, TensorWordSum) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"TensorWordSum({render_words(self)!r})"


def render_words(w: TensorWordSum) -> str:
    if not w.terms:
        return "0"
    parts = []
    for word, c in sorted(w.terms.items()):
        letters = " ".join("[" + ",".join(map(str, g)) + "]" for g in word) or "1"
        parts.append(f"({render(c)}) {letters}")
    return " + ".join(parts)


def twisted_product(a: TensorWordSum, b: TensorWordSum, F: FormMatrix) -> TensorWordSum:
    """Product twisted by q^(-f(word1, word2))."""
    out: dict[Word, HPoly] = {}
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            k = F.pair_words(w1, w2)
            w = w1 + w2
            out[w] = out.get(w, HPoly.zero()) + c1 * c2 * HPoly.monomial(q=-k)
    return TensorWordSum(out)


# ----------------------------------------------------------------------
# rewriting


def letter_key(g: Vector) -> Vector:
    return tuple(-x for x in g)


def is_normal(word: Word) -> bool:
    return all(letter_key(word[i]) <= letter_key(word[i + 1]) for i in range(len(word) - 1))


def _inversion(word: Word, strategy: str) -> int | None:
    idx = range(len(word) - 1)
    if strategy == "rightmost":
        idx = reversed(idx)
    for i in idx:
        if letter_key(word[i]) > letter_key(word[i + 1]):
            return i
    return None


_Z_FACTOR = {
    "env_qz": HPoly.monomial(z=1),
    "env_q": HPoly.one(),
    "sym_q": None,
}


def normal_form(
    w: TensorWordSum,
    F: FormMatrix,
    deformation: str = "env_qz",
    strategy: str = "leftmost",
) -> TensorWordSum:
    """Rewrite every word into weakly increasing letters.

    ``strategy`` picks which adjacent inversion of a word is rewritten first.
    """
    if deformation not in _Z_FACTOR:
        raise ValueError(f"unknown deformation {deformation!r}; expected one of {DEFORMATIONS}")
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    zfac = _Z_FACTOR[deformation]
    for word in w.terms:
        for g in word:
            F.check(g)
    done: dict[Word, HPoly] = {}
    work: dict[Word, HPoly] = dict(w.terms)
    zero = HPoly.zero()
    while work:
        word, c = work.popitem()
        i = _inversion(word, strategy)
        if i is None:
            s = done.get(word, zero) + c
            if s:
                done[word] = s
            else:
                done.pop(word, None)
            continue
        g, h = word[i], word[i + 1]
        k = F(g, h)
        targets = [(word[:i] + (h, g) + word[i + 2:], c * HPoly.monomial(q=2 * k))]
        if zfac is not None and k:
            coeff = c * zfac * HPoly.lift(QLaurent.q(k) * qint(k))
            targets.append((word[:i] + (_add(g, h),) + word[i + 2:], coeff))
        for target, tc in targets:
            s = work.get(target, zero) + tc
            if s:
                work[target] = s
            else:
                work.pop(target, None)
    return TensorWordSum(done)


def confluence_check(
    a: Sequence[int], b: Sequence[int], c: Sequence[int], F: FormMatrix, deformation: str = "env_qz"
) -> bool:
    """Leftmost-first and rightmost-first rewriting of a (x) b (x) c agree."""
    w = TensorWordSum.word(a, b, c)
    return normal_form(w, F, deformation, "leftmost") == normal_form(w, F, deformation, "rightmost")


# ----------------------------------------------------------------------
# random inputs and JSON


def random_form(r: int, rng: random.Random, bound: int = 5) -> FormMatrix:
    F = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            v = rng.randint(-bound, bound)
            F[i][j], F[j][i] = v, -v
    return FormMatrix(tuple(map(tuple, F)))


def random_vector(r: int, rng: random.Random, bound: int = 3) -> Vector:
    return tuple(rng.randint(-bound, bound) for _ in range(r))


def load_form(data: dict | str) -> FormMatrix:
    """``{"r": int, "F": [[...], ...]}``"""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        F = FormMatrix(tuple(tuple(row) for row in data["F"]))
    except (KeyError, TypeError):
        raise ValueError("form JSON needs 'F' as a list of integer rows") from None
    if "r" in data and data["r"] != F.r:
        raise ValueError(f"form JSON: r={data['r']} but F is {F.r}x{F.r}")
    return F


def load_words(data: dict | str) -> TensorWordSum:
    """``{"words": [{"coeff": "<poly>", "letters": [[...], ...]}, ...]}``"""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        entries: Iterable = data["words"]
        total = TensorWordSum()
        for entry in entries:
            coeff = parse(str(entry.get("coeff", "1")), HPoly)
            total = total + TensorWordSum({tuple(tuple(g) for g in entry["letters"]): coeff})
    except (KeyError, TypeError, AttributeError):
        raise ValueError("word JSON needs 'words' entries with 'letters'") from None
    return total


def dump_words(w: TensorWordSum) -> dict:
    return {
        "words": [
            {"coeff": render(c), "letters": [list(g) for g in word]}
            for word, c in sorted(w.terms.items())
        ]
    }
