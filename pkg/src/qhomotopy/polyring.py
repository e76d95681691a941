"""Exact sparse polynomial arithmetic over the integers.

Three concrete rings share one implementation:

* :class:`QLaurent`   -- Laurent polynomials in ``q``
* :class:`HPoly`      -- polynomials in ``t`` and ``z`` with ``QLaurent`` coefficients
* :class:`HomflyPoly` -- Laurent polynomials in ``v`` and ``z``

Values are immutable and kept in canonical form (no zero coefficients), so
``==`` is structural equality. Coefficients are Python ints.
"""

from __future__ import annotations

import re
from typing import Callable, ClassVar, Mapping

__all__ = [
    "ParseError",
    "QLaurent",
    "HPoly",
    "HomflyPoly",
    "qint",
    "qbracket2",
    "substitute_q",
    "render",
    "render_grouped",
    "parse",
]


class ParseError(ValueError):
    """Malformed polynomial text; ``pos`` is the 0-based offending column."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"at position {pos}: {message}")
        self.pos = pos


class _Poly:
    VARS: ClassVar[tuple[str, ...]] = ()
    LAURENT: ClassVar[frozenset[str]] = frozenset()

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None):
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            nv = len(self.VARS)
            for exps, c in terms.items():
                if c:
                    if len(exps) != nv:
                        raise ValueError(f"exponent tuple {exps!r} does not match {self.VARS}")
                    clean[tuple(exps)] = int(c)
            self._check_exponents(clean)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict):
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def _check_exponents(cls, terms):
        for i, var in enumerate(cls.VARS):
            if var in cls.LAURENT:
                continue
            for exps in terms:
                if exps[i] < 0:
                    raise ValueError(f"negative exponent of {var} in {cls.__name__}")

    # -- construction -------------------------------------------------
    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({(0,) * len(cls.VARS): 1})

    @classmethod
    def constant(cls, c: int):
        return cls._raw({(0,) * len(cls.VARS): c} if c else {})

    @classmethod
    def monomial(cls, coeff: int = 1, **exps: int):
        unknown = set(exps) - set(cls.VARS)
        if unknown:
            raise ValueError(f"unknown variable(s) {sorted(unknown)} for {cls.__name__}")
        key = tuple(exps.get(v, 0) for v in cls.VARS)
        return cls({key: coeff})

    @classmethod
    def var(cls, name: str):
        return cls.monomial(**{name: 1})

    # -- access --------------------------------------------------------
    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degree(self, var: str) -> int:
        """Largest exponent of ``var``; raises on the zero polynomial."""
        i = self.VARS.index(var)
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(e[i] for e in self._terms)

    def low_degree(self, var: str) -> int:
        i = self.VARS.index(var)
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return min(e[i] for e in self._terms)

    # -- arithmetic ----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return type(self).constant(other)
        if isinstance(other, QLaurent) and type(self) is HPoly:
            return HPoly._raw({(e[0], 0, 0): c for e, c in other._terms.items()})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return type(self)._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return type(self).zero()
            return type(self)._raw({e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return type(self)._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            # a single Laurent monomial can be inverted
            if isinstance(k, int) and len(self._terms) == 1:
                (e, c), = self._terms.items()
                if c in (1, -1) and all(x == 0 or v in self.LAURENT for x, v in zip(e, self.VARS)):
                    return type(self)._raw({tuple(x * k for x in e): c ** (-k)})
            raise ValueError("only nonnegative powers (or powers of a unit monomial)")
        result = type(self).one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self._terms == ({(0,) * len(self.VARS): other} if other else {})
        if type(other) is not type(self):
            if isinstance(other, _Poly):
                o = self._coerce(other)
                if o is not None:
                    return o._terms == self._terms
                if isinstance(self, QLaurent):
                    s = other._coerce(self)
                    return s is not None and s._terms == other._terms
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    # -- substitution --------------------------------------------------
    def specialize(self, var: str, value: int):
        """Set ``var`` to an integer constant (must be a unit if negative powers occur)."""
        i = self.VARS.index(var)
        out: dict[tuple[int, ...], int] = {}
        for e, c in self._terms.items():
            k = e[i]
            if k < 0:
                if value not in (1, -1):
                    raise ValueError(f"cannot set {var}={value} with negative powers present")
                factor = value ** (-k)
            else:
                factor = value ** k
            key = e[:i] + (0,) + e[i + 1:]
            out[key] = out.get(key, 0) + c * factor
        return type(self)._raw({e: c for e, c in out.items() if c})

    def map_var(self, var: str, fn: Callable[[int], tuple[int, int]]):
        """Apply ``var^k -> sign * var^k'`` where ``fn(k) == (sign, k')``."""
        i = self.VARS.index(var)
        out: dict[tuple[int, ...], int] = {}
        for e, c in self._terms.items():
            sign, k = fn(e[i])
            key = e[:i] + (k,) + e[i + 1:]
            out[key] = out.get(key, 0) + sign * c
        return type(self)(out)

    def shift(self, **exps: int):
        """Multiply by a monomial with unit coefficient."""
        d = tuple(exps.get(v, 0) for v in self.VARS)
        return type(self)({tuple(a + b for a, b in zip(e, d)): c for e, c in self._terms.items()})

    # -- text ----------------------------------------------------------
    def _sort_key(self, exps):
        return exps

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: self._sort_key(kv[0]))

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"{type(self).__name__}({render(self)!r})"


class QLaurent(_Poly):
    """Laurent polynomial in ``q`` with integer coefficients."""

    VARS = ("q",)
    LAURENT = frozenset({"q"})
    __slots__ = ()

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int]) -> "QLaurent":
        return cls({(k,): c for k, c in coeffs.items()})

    @classmethod
    def q(cls, k: int = 1, coeff: int = 1) -> "QLaurent":
        return cls._raw({(k,): coeff} if coeff else {})

    def coeffs(self) -> dict[int, int]:
        return {e[0]: c for e, c in self._terms.items()}

    def coeff(self, k: int) -> int:
        return self._terms.get((k,), 0)

    def exponents(self) -> list[int]:
        return sorted(e[0] for e in self._terms)

    def divexact(self, other: "QLaurent") -> "QLaurent":
        """Exact division in Z[q, q^-1]; raises if there is a remainder."""
        if not other:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self:
            return QLaurent.zero()
        a = self.coeffs()
        b = other.coeffs()
        alo, blo = min(a), min(b)
        num = {k - alo: c for k, c in a.items()}
        den = {k - blo: c for k, c in b.items()}
        dtop = max(den)
        lead = den[dtop]
        quot: dict[int, int] = {}
        while num:
            top = max(num)
            if top < dtop:
                break
            c = num[top]
            if c % lead:
                raise ValueError("not exactly divisible: leading coefficient mismatch")
            qc = c // lead
            shift = top - dtop
            quot[shift] = qc
            for k, dc in den.items():
                v = num.get(k + shift, 0) - qc * dc
                if v:
                    num[k + shift] = v
                else:
                    num.pop(k + shift, None)
        if num:
            raise ValueError("not exactly divisible: nonzero remainder")
        return QLaurent.from_dict({k + alo - blo: c for k, c in quot.items()})

    def evaluate_at_one(self) -> int:
        return sum(self._terms.values())


class HPoly(_Poly):
    """Polynomial in ``t`` and ``z`` with Laurent-in-``q`` coefficients.

    Stored flat with exponent tuples ``(q, t, z)``.
    """

    VARS = ("q", "t", "z")
    LAURENT = frozenset({"q"})
    __slots__ = ()

    @classmethod
    def from_coefficients(cls, coeffs: Mapping[tuple[int, int], QLaurent]) -> "HPoly":
        """Build from ``{(deg_t, deg_z): QLaurent}``."""
        out = {}
        for (dt, dz), ql in coeffs.items():
            for (k,), c in ql.items():
                out[(k, dt, dz)] = c
        return cls(out)

    @classmethod
    def lift(cls, ql: QLaurent, t: int = 0, z: int = 0) -> "HPoly":
        if t < 0 or z < 0:
            raise ValueError("t and z exponents must be nonnegative")
        return cls._raw({(e[0], t, z): c for e, c in ql._terms.items()})

    def coefficients(self) -> dict[tuple[int, int], QLaurent]:
        """Group as ``{(deg_t, deg_z): QLaurent}``."""
        groups: dict[tuple[int, int], dict] = {}
        for (k, dt, dz), c in self._terms.items():
            groups.setdefault((dt, dz), {})[(k,)] = c
        return {key: QLaurent._raw(d) for key, d in groups.items()}

    def coeff(self, t: int, z: int) -> QLaurent:
        return QLaurent._raw({(k,): c for (k, dt, dz), c in self._terms.items() if dt == t and dz == z})

    @property
    def deg_t(self) -> int:
        return self.degree("t") if self._terms else 0

    def _sort_key(self, exps):
        k, dt, dz = exps
        return (-dt, dz, k)


class HomflyPoly(_Poly):
    """Laurent polynomial in ``v`` and ``z``."""

    VARS = ("v", "z")
    LAURENT = frozenset({"v", "z"})
    __slots__ = ()

    @classmethod
    def lift(cls, ql: QLaurent, z: int = 0) -> "HomflyPoly":
        return cls._raw({(e[0], z): c for e, c in ql._terms.items()})

    def coeff_z(self, k: int) -> QLaurent:
        """The ``v``-coefficient of ``z^k`` rewritten as a polynomial in ``q``."""
        return QLaurent._raw({(v,): c for (v, dz), c in self._terms.items() if dz == k})

    def z_exponents(self) -> list[int]:
        return sorted({dz for (_, dz) in self._terms})

    def _sort_key(self, exps):
        v, dz = exps
        return (dz, v)


# ----------------------------------------------------------------------
# q-integers


def qint(n: int) -> QLaurent:
    """Symmetric q-integer q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    if n == 0:
        return QLaurent.zero()
    if n < 0:
        return -qint(-n)
    return QLaurent._raw({(k,): 1 for k in range(n - 1, -n, -2)})


def qbracket2(n: int) -> QLaurent:
    """(q^(2n) - 1)/(q - q^-1), expanded without division."""
    if n > 0:
        return QLaurent._raw({(k,): 1 for k in range(1, 2 * n, 2)})
    if n < 0:
        return QLaurent._raw({(k,): -1 for k in range(2 * n + 1, 0, 2)})
    return QLaurent.zero()


def substitute_q(p, mode: str):
    """``mode='one'`` sets q=1; ``mode='neg_inverse'`` sends q to -1/q."""
    if mode == "one":
        return p.specialize("q", 1)
    if mode == "neg_inverse":
        return p.map_var("q", lambda k: (-1 if k % 2 else 1, -k))
    raise ValueError(f"unknown substitution mode {mode!r}")


# ----------------------------------------------------------------------
# rendering


def _monomial_text(poly_cls, exps, coeff, first: bool) -> str:
    factors = []
    for var, k in zip(poly_cls.VARS, exps):
        if k == 0:
            continue
        factors.append(var if k == 1 else f"{var}^{k}")
    mag = abs(coeff)
    body = factors if (mag == 1 and factors) else [str(mag)] + factors
    text = " ".join(body)
    if first:
        return ("-" if coeff < 0 else "") + text
    return (" - " if coeff < 0 else " + ") + text


def render(p) -> str:
    """Flat canonical text, e.g. ``q^6 t^3 - q^4 t z^2``."""
    if not p:
        return "0"
    items = p.sorted_items()
    parts = [_monomial_text(type(p), e, c, i == 0) for i, (e, c) in enumerate(items)]
    return "".join(parts)


def render_grouped(p: HPoly) -> str:
    """Collect the q-coefficient of every t,z-monomial in parentheses.

    ``q^6 t^3 + (q + 2 q^3 + 2 q^5 - q^7 - q^9) t^2 z - (q^4 + 2 q^6 + q^8) t z^2``
    """
    if not p:
        return "0"
    groups = p.coefficients()
    out = []
    for (dt, dz) in sorted(groups, key=lambda k: (-k[0], k[1])):
        ql = groups[(dt, dz)]
        tz = []
        if dt:
            tz.append("t" if dt == 1 else f"t^{dt}")
        if dz:
            tz.append("z" if dz == 1 else f"z^{dz}")
        first = not out
        if len(ql) == 1:
            ((k,), c), = ql.items()
            out.append(_monomial_text(HPoly, (k, dt, dz), c, first))
            continue
        items = ql.sorted_items()
        negate = items[0][1] < 0
        inner = render(-ql if negate else ql)
        body = " ".join([f"({inner})"] + tz)
        if first:
            out.append(("-" if negate else "") + body)
        else:
            out.append((" - " if negate else " + ") + body)
    return "".join(out)


# ----------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(\^)|([-+*()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        tokens.append((m.lastindex, m.group(m.lastindex), start))
        pos = m.end()
    tokens.append((0, "", n))
    return tokens


class _Parser:
    NUM, VAR, CARET, OP = 1, 2, 3, 4

    def __init__(self, text: str, cls):
        self.toks = _tokenize(text)
        self.i = 0
        self.cls = cls

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != self.OP or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def parse(self):
        kind, _, pos = self.peek()
        if kind == 0:
            raise ParseError("empty polynomial", pos)
        value = self.expr()
        kind, val, pos = self.peek()
        if kind != 0:
            raise ParseError(f"unexpected {val!r}", pos)
        return value

    def expr(self):
        kind, val, pos = self.peek()
        sign = 1
        if kind == self.OP and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        total = self.term() * sign
        while True:
            kind, val, pos = self.peek()
            if kind == self.OP and val in "+-":
                self.take()
                t = self.term()
                total = total + t if val == "+" else total - t
            else:
                return total

    def _starts_factor(self, tok):
        kind, val, _ = tok
        return kind in (self.NUM, self.VAR) or (kind == self.OP and val == "(")

    def term(self):
        kind, val, pos = self.peek()
        if not self._starts_factor(self.peek()):
            raise ParseError("expected a term" if kind else "unexpected end of input", pos)
        value = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == self.OP and tok[1] == "*":
                self.take()
                if not self._starts_factor(self.peek()):
                    raise ParseError("expected a factor after '*'", self.peek()[2])
                value = value * self.factor()
            elif self._starts_factor(tok):
                value = value * self.factor()
            else:
                return value

    def factor(self):
        kind, val, pos = self.take()
        cls = self.cls
        if kind == self.NUM:
            return cls.constant(int(val))
        if kind == self.OP and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == self.VAR:
            if val not in cls.VARS:
                raise ParseError(f"unknown variable {val!r}", pos)
            exp = 1
            if self.peek()[0] == self.CARET:
                self.take()
                k2, v2, p2 = self.take()
                neg = False
                if k2 == self.OP and v2 == "-":
                    neg = True
                    k2, v2, p2 = self.take()
                if k2 != self.NUM:
                    raise ParseError("expected an integer exponent", p2)
                exp = -int(v2) if neg else int(v2)
                if exp < 0 and val not in cls.LAURENT:
                    raise ParseError(f"negative exponent not allowed on {val!r}", p2)
            return cls.monomial(**{val: exp})
        raise ParseError(f"unexpected {val!r}" if kind else "unexpected end of input", pos)


def parse(text: str, cls=HPoly):
    """Parse polynomial text (flat or grouped with parentheses) into ``cls``."""
    return _Parser(text, cls).parse()
