"""Quotient rings ``A = P/I_A`` presented by variables and relations."""

from __future__ import annotations

from typing import Iterable

from .field import Field
from .groebner import Ideal, ideal_dimension
from .poly import Polynomial, PolyRing, monomials_of_degree, parse_polys


class RingPresentation:
    """``field[names] / (relations)``, localised (implicitly) at the origin.

    The maximal ideal is the one generated by the variables.  Ideals of the
    quotient are represented by preimages in the ambient ring, so
    :meth:`ideal` always adds the relations.
    """

    def __init__(self, field: Field, names: Iterable[str], relations: Iterable = ()):
        self.ambient = PolyRing(field, tuple(names))
        rels = []
        for r in relations:
            if isinstance(r, str):
                rels.extend(parse_polys(r, self.ambient))
            else:
                rels.append(self.ambient(r))
        self.relations = tuple(r for r in rels if r)
        self.defining_ideal = Ideal(self.ambient, self.relations)
        self._dim = None

    @classmethod
    def polynomial_ring(cls, field: Field, names: Iterable[str]) -> "RingPresentation":
        return cls(field, names, ())

    @property
    def field(self) -> Field:
        return self.ambient.field

    @property
    def names(self) -> tuple:
        return self.ambient.names

    @property
    def nvars(self) -> int:
        return self.ambient.nvars

    def poly(self, value) -> Polynomial:
        return self.ambient(value)

    def gens(self) -> list[Polynomial]:
        return self.ambient.gens()

    def _flatten(self, gens) -> list[Polynomial]:
        out = []
        for g in gens:
            if isinstance(g, str):
                out.extend(parse_polys(g, self.ambient))
            elif isinstance(g, Ideal):
                out.extend(g.gens)
            else:
                out.append(self.ambient(g))
        return out

    def ideal(self, *gens) -> Ideal:
        """Preimage in the ambient ring of the ideal of ``A`` generated by ``gens``."""
        return Ideal(self.ambient, self._flatten(gens) + list(self.relations))

    @property
    def max_ideal(self) -> Ideal:
        return self.ideal(*self.gens())

    def max_ideal_power(self, n: int) -> Ideal:
        """Preimage of ``m^n`` (generated by all monomials of degree ``n``)."""
        mons = [self.ambient.monomial(e) for e in monomials_of_degree(self.nvars, n)]
        return self.ideal(*mons)

    def dimension(self) -> int:
        if self._dim is None:
            self._dim = ideal_dimension(self.defining_ideal)
        return self._dim

    def __str__(self):
        base = str(self.ambient)
        if not self.relations:
            return base
        return f"{base}/({', '.join(map(str, self.relations))})"

    __repr__ = __str__
