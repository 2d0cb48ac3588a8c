"""Buchberger's algorithm and ideal operations in a polynomial ring.

Ideals of a quotient ring ``A = P/I_A`` are handled through their preimages
in ``P`` (see :meth:`socle_lab.ring.RingPresentation.ideal`); nothing in this
module knows about quotient rings.
"""

from __future__ import annotations

import heapq
import operator
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .poly import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    PolyRing,
    mono_divides,
    mono_lcm,
)


class SaturationError(RuntimeError):
    """Iterated colon did not stabilise within the iteration cap."""


# ---------------------------------------------------------------------------
# low-level dict arithmetic; polynomials are {monomial: coeff}


def _monic(f: dict, lm, field) -> dict:
    c = f[lm]
    if c == 1:
        return f
    inv = field.inv(c)
    p = field.p
    if p:
        return {m: v * inv % p for m, v in f.items()}
    return {m: v * inv for m, v in f.items()}


def _mask(m) -> int:
    bits = 0
    for i, e in enumerate(m):
        if e:
            bits |= 1 << i
    return bits


def _reduce(f: dict, basis: Sequence[tuple], order: MonomialOrder, field) -> dict:
    """Full normal form of ``f`` modulo monic ``basis`` = [(lm, poly dict), ...]."""
    if not f or not basis:
        return dict(f)
    p = field.p
    rkey = order.rkey
    add, sub = operator.add, operator.sub
    f = dict(f)
    heap = [(rkey(m), m) for m in f]
    heapq.heapify(heap)
    rem = {}
    info = [(lm, _mask(lm), sum(lm), g) for lm, g in basis]
    while heap:
        _, m = heapq.heappop(heap)
        c = f.pop(m, None)
        if c is None:
            continue
        mmask = _mask(m)
        mdeg = sum(m)
        for g_lm, g_mask, g_deg, g in info:
            if g_deg <= mdeg and not (g_mask & ~mmask) and all(map(operator.le, g_lm, m)):
                break
        else:
            rem[m] = c
            continue
        q = tuple(map(sub, m, g_lm))
        for gm, gc in g.items():
            if gm == g_lm:
                continue
            mm = tuple(map(add, q, gm))
            old = f.get(mm)
            v = (0 if old is None else old) - c * gc
            if p:
                v %= p
            if v:
                f[mm] = v
                if old is None:
                    heapq.heappush(heap, (rkey(mm), mm))
            elif old is not None:
                del f[mm]
    return rem


def _spoly(f, flm, g, glm, order, field) -> dict:
    lcm = mono_lcm(flm, glm)
    p = field.p
    uf = tuple(a - b for a, b in zip(lcm, flm))
    ug = tuple(a - b for a, b in zip(lcm, glm))
    out = {}
    for m, c in f.items():
        out[tuple(a + b for a, b in zip(m, uf))] = c
    for m, c in g.items():
        mm = tuple(a + b for a, b in zip(m, ug))
        v = out.get(mm, 0) - c
        if p:
            v %= p
        if v:
            out[mm] = v
        else:
            out.pop(mm, None)
    return out


def _lead(f: dict, order: MonomialOrder):
    return min(f, key=order.rkey)


def _buchberger(polys: Iterable[dict], order: MonomialOrder, field) -> list[tuple]:
    """Reduced Groebner basis as a sorted list of (lm, monic dict).

    Pairs are selected by sugar degree, ties broken by the normal strategy
    (smallest lcm first); they are pruned with the Gebauer-Moeller update,
    which implements both of Buchberger's criteria.
    """
    key = order.key
    items: list[tuple] = []   # every basis element ever added: (lm, poly)
    sugar: list[int] = []
    active: list[int] = []    # indices into items forming the current basis
    pairs: list[tuple] = []   # heap of (sugar, key(lcm), i, j)

    def coprime(a, b):
        return all(x == 0 or y == 0 for x, y in zip(a, b))

    def pair_sugar(i, j, lcm):
        di = sum(lcm) - sum(items[i][0])
        dj = sum(lcm) - sum(items[j][0])
        return max(sugar[i] + di, sugar[j] + dj)

    def update(h_idx):
        nonlocal active, pairs
        hlm = items[h_idx][0]
        cand = [(g, mono_lcm(items[g][0], hlm)) for g in active]
        kept = []
        while cand:
            g, lcm = cand.pop(0)
            if coprime(items[g][0], hlm) or not any(
                    mono_divides(l2, lcm) for _, l2 in cand + kept):
                kept.append((g, lcm))
        new_pairs = [(pair_sugar(g, h_idx, lcm), key(lcm), g, h_idx) for g, lcm in kept
                     if not coprime(items[g][0], hlm)]
        old = []
        for entry in pairs:
            i, j = entry[2], entry[3]
            lij = mono_lcm(items[i][0], items[j][0])
            if (mono_divides(hlm, lij)
                    and mono_lcm(items[i][0], hlm) != lij
                    and mono_lcm(items[j][0], hlm) != lij):
                continue
            old.append(entry)
        pairs = old + new_pairs
        heapq.heapify(pairs)
        active = [g for g in active if not mono_divides(hlm, items[g][0])] + [h_idx]

    def basis_view():
        return [items[i] for i in active]

    def insert(h, s):
        lm = _lead(h, order)
        items.append((lm, _monic(h, lm, field)))
        sugar.append(s)
        update(len(items) - 1)

    for f in sorted((f for f in polys if f), key=lambda f: max(map(sum, f))):
        h = _reduce(f, basis_view(), order, field)
        if h:
            insert(h, max(map(sum, f)))

    while pairs:
        s_deg, _, i, j = heapq.heappop(pairs)
        (flm, f), (glm, g) = items[i], items[j]
        s = _spoly(f, flm, g, glm, order, field)
        h = _reduce(s, basis_view(), order, field)
        if h:
            insert(h, max(s_deg, max(map(sum, h))))

    # interreduce the (already minimal) basis
    basis = basis_view()
    reduced = []
    for k, (lm, g) in enumerate(basis):
        others = basis[:k] + basis[k + 1:]
        tail = {m: c for m, c in g.items() if m != lm}
        tail = _reduce(tail, others, order, field)
        tail[lm] = g[lm]
        reduced.append((lm, tail))
    reduced.sort(key=lambda t: order.rkey(t[0]))
    return reduced


# ---------------------------------------------------------------------------
# public API


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis; ``elements`` are monic, largest leading term first."""

    ring: PolyRing
    order: MonomialOrder
    elements: tuple

    @classmethod
    def _from_pairs(cls, ring, order, pairs):
        obj = cls(ring, order, tuple(Polynomial(ring, g) for _, g in pairs))
        object.__setattr__(obj, "_pairs", pairs)
        return obj

    @property
    def leading_monomials(self) -> list:
        return [lm for lm, _ in self._pairs]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def is_unit(self) -> bool:
        return any(not any(lm) for lm in self.leading_monomials)

    def reduce(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise ValueError("polynomial and basis live in different rings")
        return Polynomial(self.ring, _reduce(f.terms, self._pairs, self.order, self.ring.field))

    def contains(self, f: Polynomial) -> bool:
        return not self.reduce(f).terms


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX,
               ring: PolyRing | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    if ring is None:
        if not gens:
            raise ValueError("ring required for an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators from different rings")
    pairs = _buchberger((g.terms for g in gens), order, ring.field)
    return GroebnerBasis._from_pairs(ring, order, pairs)


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Fully reduced remainder of ``f`` modulo ``gb``."""
    return gb.reduce(f)


class Ideal:
    """An ideal of a polynomial ring given by generators.

    Reduced Groebner bases are cached per monomial order on the instance;
    instances are otherwise immutable.
    """

    def __init__(self, ring: PolyRing, gens: Iterable[Polynomial] = ()):
        self.ring = ring
        gens = [ring(g) for g in gens]
        self.gens = tuple(g for g in gens if g.terms)
        self._gb: dict = {}

    def groebner(self, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
        gb = self._gb.get(order)
        if gb is None:
            gb = buchberger(self.gens, order, self.ring)
            self._gb[order] = gb
        return gb

    def reduce(self, f: Polynomial) -> Polynomial:
        return self.groebner().reduce(self.ring(f))

    def __contains__(self, f) -> bool:
        return ideal_membership(self.ring(f), self)

    def contains_ideal(self, other: "Ideal") -> bool:
        gb = self.groebner()
        return all(gb.contains(g) for g in other.gens)

    def equals(self, other: "Ideal") -> bool:
        return ideal_equal(self, other)

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def is_zero(self) -> bool:
        return not self.gens

    def __add__(self, other):
        if isinstance(other, Ideal):
            return Ideal(self.ring, self.gens + other.gens)
        return Ideal(self.ring, self.gens + tuple(self.ring(g) for g in other))

    def __mul__(self, other):
        if isinstance(other, Ideal):
            return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])
        other = self.ring(other)
        return Ideal(self.ring, [f * other for f in self.gens])

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Ideal":
        result = Ideal(self.ring, [self.ring.one])
        for _ in range(n):
            result = result * self
        return result

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.gens))})"


def ideal_membership(f: Polynomial, I: Ideal) -> bool:
    return I.groebner().contains(f)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    """Equality of ideals via their reduced grevlex Groebner bases."""
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    return I.groebner().elements == J.groebner().elements


def _lift(ring: PolyRing, t_ring: PolyRing, f: Polynomial) -> Polynomial:
    return Polynomial(t_ring, {(0,) + m: c for m, c in f.terms.items()})


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` by eliminating ``t`` from ``t*I + (1-t)*J``."""
    ring = I.ring
    if J.ring != ring:
        raise ValueError("ideals live in different rings")
    if I.is_zero() or J.is_zero():
        return Ideal(ring)
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    t_ring = ring.extend("_t", front=True)
    t = t_ring.var(0)
    gens = [t * _lift(ring, t_ring, f) for f in I.gens]
    gens += [(1 - t) * _lift(ring, t_ring, g) for g in J.gens]
    gb = buchberger(gens, MonomialOrder("elim", 1), t_ring)
    out = [Polynomial(ring, {m[1:]: c for m, c in g.terms.items()})
           for g in gb if all(m[0] == 0 for m in g.terms)]
    return Ideal(ring, out)


def divide_exact(h: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient ``h / g``; raises if ``g`` does not divide ``h``."""
    field = h.ring.field
    order = GREVLEX
    glm = g.lm(order)
    ginv = field.inv(g.terms[glm])
    p = field.p
    r = dict(h.terms)
    q = {}
    while r:
        m = _lead(r, order)
        if not mono_divides(glm, m):
            raise ArithmeticError(f"{g} does not divide {h}")
        u = tuple(a - b for a, b in zip(m, glm))
        c = r[m] * ginv
        if p:
            c %= p
        q[u] = c
        for gm, gc in g.terms.items():
            mm = tuple(a + b for a, b in zip(u, gm))
            v = r.get(mm, 0) - c * gc
            if p:
                v %= p
            if v:
                r[mm] = v
            else:
                r.pop(mm, None)
    return Polynomial(h.ring, q)


def colon_element(I: Ideal, g: Polynomial) -> Ideal:
    """``(I : g)`` computed as ``(I ∩ (g)) / g``."""
    if not g.terms:
        raise ValueError("colon by the zero element")
    if I.groebner().contains(g):
        return Ideal(I.ring, [I.ring.one])
    inter = ideal_intersect(I, Ideal(I.ring, [g]))
    return Ideal(I.ring, [divide_exact(h, g) for h in inter.gens])


def ideal_colon(I: Ideal, J: Ideal | Polynomial) -> Ideal:
    """``(I : J) = {f : f*J ⊆ I}``, the intersection of element colons."""
    if isinstance(J, Polynomial):
        return colon_element(I, J)
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    result = None
    for g in J.gens:
        part = colon_element(I, g)
        result = part if result is None else ideal_intersect(result, part)
    return result


def saturate(I: Ideal, J: Ideal, cap: int = 64) -> tuple[Ideal, int]:
    """Stable value of ``I : J : J : ...`` and the number of colons taken."""
    current = I
    for k in range(1, cap + 1):
        nxt = ideal_colon(current, J)
        if ideal_equal(nxt, current):
            return current, k
        current = nxt
    raise SaturationError(f"saturation did not stabilise within {cap} steps")


def ideal_dimension(I: Ideal) -> int:
    """Krull dimension of ``P/I``; -1 when ``I`` is the unit ideal."""
    gb = I.groebner()
    if gb.is_unit():
        return -1
    n = I.ring.nvars
    supports = [frozenset(i for i, e in enumerate(lm) if e) for lm in gb.leading_monomials]
    for k in range(n, -1, -1):
        for subset in combinations(range(n), k):
            s = frozenset(subset)
            if not any(sup <= s for sup in supports):
                return k
    return 0
