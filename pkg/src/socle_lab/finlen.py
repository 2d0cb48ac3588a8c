"""Finite-length subquotients ``V/J`` of a ring, as explicit vector spaces.

``V ⊇ J`` are ideals of the ambient polynomial ring (preimages of ideals of
``A``).  The module is spanned by the normal forms modulo ``J`` of
``m^k * gens(V)`` for ``k`` below the annihilating power, so no module
Groebner bases are needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groebner import Ideal
from .linalg import Echelon, kernel
from .poly import Polynomial

DEFAULT_CAP = 32


class NotFiniteLengthError(RuntimeError):
    """``m^cap * V`` is still not inside ``J``."""

    def __init__(self, cap: int, detail: str | None = None):
        self.cap = cap
        super().__init__(
            "not finite length: "
            + (detail or f"m^{cap}·V ⊄ J")
            + f" (cap {cap}; raise the cap if this is premature)"
        )


def _levels(V: Ideal, J: Ideal, cap: int):
    """Yield the echelon forms of ``m^k V + J / J`` for k = 0, 1, ... until zero."""
    gb = J.groebner()
    ring = J.ring
    field = ring.field
    level = Echelon(field)
    for g in V.gens:
        level.add(gb.reduce(g).terms)
    k = 0
    while level.rank:
        if k >= cap:
            raise NotFiniteLengthError(cap)
        yield level
        nxt = Echelon(field)
        for row in level.basis():
            f = Polynomial(ring, row)
            for i in range(ring.nvars):
                nxt.add(gb.reduce(f.mul_term(_unit(ring.nvars, i))).terms)
        level = nxt
        k += 1


def _unit(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


def annihilating_power(V: Ideal, J: Ideal, cap: int = DEFAULT_CAP) -> int:
    """Least ``N <= cap`` with ``m^N * V ⊆ J``."""
    return sum(1 for _ in _levels(V, J, cap))


@dataclass
class FiniteLengthModule:
    """``V/J`` with a basis of normal forms and per-variable action matrices.

    ``basis`` is in reduced echelon form with respect to the monomials at
    ``pivots``; ``action[i][j]`` is the image of ``basis[j]`` under the
    ``i``-th variable in basis coordinates.
    """

    V: Ideal
    J: Ideal
    ann_power: int
    basis: list
    pivots: list
    action: list

    @property
    def length(self) -> int:
        return len(self.basis)

    def socle_basis(self) -> list[dict]:
        cols = [
            {(i, r): c for i, mat in enumerate(self.action) for r, c in mat[j].items()}
            for j in range(len(self.basis))
        ]
        return kernel(cols, self.J.ring.field)

    @property
    def socle_dim(self) -> int:
        return len(self.socle_basis())


def build_module(V: Ideal, J: Ideal, cap: int = DEFAULT_CAP) -> FiniteLengthModule:
    if not V.contains_ideal(J):
        raise ValueError("J is not contained in V")
    ring = J.ring
    total = Echelon(ring.field)
    N = 0
    for level in _levels(V, J, cap):
        for row in level.basis():
            total.add(row)
        N += 1
    pivots = sorted(total.rows)
    basis = [Polynomial(ring, total.rows[piv]) for piv in pivots]
    pos = {piv: j for j, piv in enumerate(pivots)}
    gb = J.groebner()
    action = []
    for i in range(ring.nvars):
        cols = []
        for b in basis:
            img = gb.reduce(b.mul_term(_unit(ring.nvars, i))).terms
            coords = total.coordinates(img)
            if total.reduce(img):
                raise ArithmeticError("module basis is not closed under the action")
            cols.append({pos[piv]: c for piv, c in coords.items()})
        action.append(cols)
    return FiniteLengthModule(V, J, N, basis, pivots, action)


def module_length(mod: FiniteLengthModule) -> int:
    return mod.length


def module_socle_dim(mod: FiniteLengthModule) -> int:
    return mod.socle_dim
