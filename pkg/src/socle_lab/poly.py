"""Sparse multivariate polynomials over exact fields, monomial orders, parsing."""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .field import Field

Monomial = tuple  # tuple[int, ...], one exponent per variable


class PolynomialParseError(ValueError):
    """Malformed polynomial text; ``pos`` is the 0-based column of the problem."""

    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        where = f" (column {pos + 1})" if pos is not None else ""
        super().__init__(message + where)


# ---------------------------------------------------------------------------
# monomial orders

def _grevlex_key(m):
    return (sum(m),) + tuple(-e for e in reversed(m))


@dataclass(frozen=True)
class MonomialOrder:
    """Monomial order: ``lex``, ``grevlex`` or ``elim`` (block elimination).

    ``elim`` makes the first ``block`` variables larger than any monomial in
    the rest, with grevlex inside each block.  ``key`` sorts ascending,
    ``rkey`` sorts the largest monomial first.
    """

    kind: str = "grevlex"
    block: int = 0
    key: Callable = dc_field(init=False, compare=False, repr=False)
    rkey: Callable = dc_field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.kind == "grevlex":
            raw = _grevlex_key
        elif self.kind == "lex":
            raw = tuple
        elif self.kind == "elim":
            if self.block < 1:
                raise ValueError("elimination order needs block >= 1")
            b = self.block

            def raw(m):
                return _grevlex_key(m[:b]) + _grevlex_key(m[b:])
        else:
            raise ValueError(f"unknown monomial order {self.kind!r}")
        key = lru_cache(maxsize=1 << 18)(raw)
        rkey = lru_cache(maxsize=1 << 18)(lambda m: tuple(-k for k in key(m)))
        object.__setattr__(self, "key", key)
        object.__setattr__(self, "rkey", rkey)

    def __str__(self):
        return f"elim({self.block})" if self.kind == "elim" else self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def order_from_name(name: str) -> MonomialOrder:
    if name.startswith("elim"):
        return MonomialOrder("elim", int(name[4:].strip("()") or 1))
    return MonomialOrder(name)


def compare_monomials(u: Monomial, v: Monomial, order: MonomialOrder = GREVLEX) -> int:
    """Return -1, 0 or 1 as ``u`` is smaller than, equal to or larger than ``v``."""
    if len(u) != len(v):
        raise ValueError(f"monomials have {len(u)} and {len(v)} variables")
    ku, kv = order.key(tuple(u)), order.key(tuple(v))
    return (ku > kv) - (ku < kv)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_of_degree(n: int, d: int):
    """All exponent vectors in ``n`` variables of total degree ``d``."""
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# rings and polynomials

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class PolyRing:
    """The polynomial ring ``field[names]``."""

    field: Field
    names: tuple

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        for n in self.names:
            if not _IDENT.match(n):
                raise ValueError(f"invalid variable name {n!r}")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps} for {self.nvars} variables")
        c = self.field(coeff)
        return Polynomial(self, {exps: c} if c else {})

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def var(self, i: int | str) -> "Polynomial":
        if isinstance(i, str):
            i = self.names.index(i)
        e = [0] * self.nvars
        e[i] = 1
        return self.monomial(e)

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise ValueError("polynomial from a different ring")
            return value
        if isinstance(value, str):
            return parse_poly(value, self)
        return self.constant(value)

    def extend(self, name: str, front: bool = False) -> "PolyRing":
        names = (name,) + self.names if front else self.names + (name,)
        return PolyRing(self.field, names)

    def __str__(self):
        return f"{self.field}[{', '.join(self.names)}]"


class Polynomial:
    """Immutable sparse polynomial: a dict ``{exponent tuple: nonzero coeff}``."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms if all(terms.values()) else {m: c for m, c in terms.items() if c}
        self._hash = None

    # -- construction helpers
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    # -- arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if p:
                v %= p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        c = f(c)
        if not c:
            return self.ring.zero
        p = f.p
        if p:
            return Polynomial(self.ring, {m: v * c % p for m, v in self.terms.items()})
        return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.p
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        if p:
            out = {m: c % p for m, c in out.items() if c % p}
        else:
            out = {m: c for m, c in out.items() if c}
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base = self.ring.one, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_term(self, mono, coeff=1) -> "Polynomial":
        """Multiply by the single term ``coeff * x^mono``."""
        f = self.ring.field
        coeff = f(coeff)
        if not coeff:
            return self.ring.zero
        p = f.p
        out = {}
        for m, c in self.terms.items():
            v = c * coeff
            out[tuple(a + b for a, b in zip(m, mono))] = v % p if p else v
        return Polynomial(self.ring, out)

    # -- inspection
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def lm(self, order: MonomialOrder = GREVLEX) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def lc(self, order: MonomialOrder = GREVLEX):
        return self.terms[self.lm(order)]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def min_degree(self) -> int:
        """Lowest total degree of a term (order of vanishing at the origin)."""
        return min((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.rkey(t[0]))

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        return self.scale(self.ring.field.inv(self.lc(order))) if self.terms else self

    def embed(self, ring: PolyRing, positions: Sequence[int]) -> "Polynomial":
        """Move into ``ring``; variable ``i`` of ``self`` becomes ``positions[i]``."""
        n = ring.nvars
        out = {}
        for m, c in self.terms.items():
            e = [0] * n
            for i, k in enumerate(m):
                e[positions[i]] = k
            out[tuple(e)] = ring.field(c) if ring.field != self.ring.field else c
        return Polynomial(ring, {m: c for m, c in out.items() if c})

    # -- printing
    def __str__(self):
        return self.format()

    def format(self, order: MonomialOrder = GREVLEX) -> str:
        """Text form with terms in decreasing ``order``."""
        if not self.terms:
            return "0"
        f = self.ring.field
        parts = []
        for m, c in self.sorted_terms(order):
            c = f.signed(c)
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ring.names, m) if e
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Polynomial({str(self)!r} in {self.ring})"


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()−]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialParseError(f"unexpected character {text[start]!r}", start)
        num, ident, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            out.append(("num", int(num), start))
        elif ident is not None:
            out.append(("id", ident, start))
        else:
            out.append(("op", "-" if op == "−" else ("^" if op == "**" else op), start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring
        self.index = {n: k for k, n in enumerate(ring.names)}

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op):
        t = self.take()
        if t[0] != "op" or t[1] != op:
            raise PolynomialParseError(f"expected {op!r}", t[2])

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise PolynomialParseError("empty polynomial", 0)
        f = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise PolynomialParseError(f"unexpected token {t[1]!r}", t[2])
        return f

    def expr(self):
        sign = 1
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            sign = -1 if t[1] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if t[1] == "+" else acc - rhs
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] == "*":
                self.take()
                acc = acc * self.factor()
            elif t[0] == "op" and t[1] == "/":
                self.take()
                d = self.take()
                if d[0] != "num":
                    raise PolynomialParseError("only integer literals may divide", d[2])
                if self.ring.field(d[1]) == 0:
                    raise PolynomialParseError(f"division by {d[1]} in {self.ring.field}", d[2])
                acc = acc.scale(self.ring.field.inv(self.ring.field(d[1])))
            elif t[0] in ("num", "id") or (t[0] == "op" and t[1] == "("):
                acc = acc * self.factor()  # implicit multiplication, e.g. 3x
            else:
                return acc

    def factor(self):
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "num":
                raise PolynomialParseError("exponent must be a non-negative integer literal", e[2])
            return base ** e[1]
        return base

    def atom(self):
        t = self.take()
        if t[0] == "num":
            c = self.ring.field(t[1])
            if t[1] and not c:
                warnings.warn(
                    f"coefficient {t[1]} vanishes in {self.ring.field}", stacklevel=4
                )
            return self.ring.constant(c)
        if t[0] == "id":
            if t[1] not in self.index:
                raise PolynomialParseError(f"unknown variable {t[1]!r}", t[2])
            return self.ring.var(self.index[t[1]])
        if t[0] == "op" and t[1] == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if t[0] == "op" and t[1] in "+-":
            inner = self.factor()
            return -inner if t[1] == "-" else inner
        raise PolynomialParseError("unexpected end of input" if t[0] == "end"
                                   else f"unexpected token {t[1]!r}", t[2])


def parse_poly(text: str, ring) -> Polynomial:
    """Parse ``text`` into a polynomial of ``ring`` (a PolyRing or RingPresentation)."""
    ring = getattr(ring, "ambient", ring)
    return _Parser(text, ring).parse()


def parse_polys(text: str, ring) -> list[Polynomial]:
    """Parse a comma-separated list of polynomials."""
    text = text.strip()
    if not text:
        return []
    out = []
    offset = 0
    for chunk in _split_top_level(text):
        try:
            out.append(parse_poly(chunk, ring))
        except PolynomialParseError as e:
            raise PolynomialParseError(str(e).rsplit(" (column", 1)[0],
                                       None if e.pos is None else offset + e.pos) from None
        offset += len(chunk) + 1
    return out


def _split_top_level(text: str) -> Iterable[str]:
    depth, start = 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            yield text[start:i]
            start = i + 1
    yield text[start:]
