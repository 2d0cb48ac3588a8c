"""Irreducible decompositions of artinian monomial ideals."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .groebner import Ideal
from .poly import Polynomial, mono_divides, mono_lcm


class NotArtinianError(ValueError):
    pass


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators (exponent tuples)."""

    generators: tuple

    @classmethod
    def from_monomials(cls, mons: Iterable[Sequence[int]]) -> "MonomialIdeal":
        mons = {tuple(m) for m in mons}
        minimal = [m for m in mons if not any(o != m and mono_divides(o, m) for o in mons)]
        return cls(tuple(sorted(minimal)))

    @classmethod
    def from_polys(cls, polys: Iterable[Polynomial]) -> "MonomialIdeal":
        mons = []
        for f in polys:
            if len(f.terms) != 1:
                raise ValueError(f"{f} is not a monomial")
            mons.extend(f.terms)
        return cls.from_monomials(mons)

    @property
    def nvars(self) -> int:
        return len(self.generators[0]) if self.generators else 0

    def contains(self, m: Sequence[int]) -> bool:
        return any(mono_divides(g, m) for g in self.generators)

    def pure_powers(self) -> dict:
        """``{i: a}`` for generators ``x_i^a``."""
        out = {}
        for g in self.generators:
            support = [i for i, e in enumerate(g) if e]
            if len(support) == 1:
                out[support[0]] = g[support[0]]
        return out

    def is_artinian(self) -> bool:
        return len(self.pure_powers()) == self.nvars

    def is_irreducible(self) -> bool:
        return all(sum(1 for e in g if e) == 1 for g in self.generators)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal.from_monomials(
            mono_lcm(a, b) for a in self.generators for b in other.generators)

    def to_ideal(self, ring) -> Ideal:
        ring = getattr(ring, "ambient", ring)
        return Ideal(ring, [ring.monomial(g) for g in self.generators])

    def standard_monomials(self) -> list:
        if not self.is_artinian():
            raise NotArtinianError("monomial ideal is not artinian")
        start = (0,) * self.nvars
        seen = {start} if not self.contains(start) else set()
        queue = deque(seen)
        while queue:
            s = queue.popleft()
            for i in range(self.nvars):
                m = s[:i] + (s[i] + 1,) + s[i + 1:]
                if m not in seen and not self.contains(m):
                    seen.add(m)
                    queue.append(m)
        return sorted(seen)

    def socle_monomials(self) -> list:
        """Standard monomials ``s`` with ``x_i * s`` in the ideal for every ``i``."""
        n = self.nvars
        return [
            s for s in self.standard_monomials()
            if all(self.contains(s[:i] + (s[i] + 1,) + s[i + 1:]) for i in range(n))
        ]


def irreducible_decomposition(I: MonomialIdeal) -> list[MonomialIdeal]:
    """One component ``(x_i^(s_i + 1))_i`` per socle monomial ``s`` of ``P/I``."""
    n = I.nvars
    comps = []
    for s in I.socle_monomials():
        gens = []
        for i in range(n):
            e = [0] * n
            e[i] = s[i] + 1
            gens.append(tuple(e))
        comps.append(MonomialIdeal.from_monomials(gens))
    return comps


def verify_irredundant(components: Sequence[MonomialIdeal], I: MonomialIdeal) -> bool:
    """Intersection equals ``I`` and omitting any one component enlarges it."""
    if not components:
        return False

    def meet(cs):
        out = cs[0]
        for c in cs[1:]:
            out = out.intersect(c)
        return out

    if meet(list(components)) != I:
        return False
    for k in range(len(components)):
        rest = list(components[:k]) + list(components[k + 1:])
        if rest and meet(rest) == I:
            return False
    return True
