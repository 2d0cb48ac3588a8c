"""Zero-dimensional quotients: staircases, multiplication matrices, socles.

The index of reducibility of a cofinite ideal ``q`` of ``A`` is the socle
dimension of ``A/q``; everything here reduces to linear algebra on the
staircase basis of ``P/(q + I_A)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .groebner import GroebnerBasis, Ideal, ideal_colon, ideal_dimension
from .linalg import kernel
from .poly import GREVLEX, MonomialOrder, Polynomial


class NotZeroDimensionalError(ValueError):
    pass


class NotOriginPrimaryError(ValueError):
    """The quotient has points of support away from the origin."""


class QuotientAlgebra:
    """``P/I`` for a zero-dimensional ``I`` with its staircase basis.

    ``mult[i][j]`` is column ``j`` of the matrix of multiplication by the
    ``i``-th variable, as a sparse dict ``{row: coeff}``.
    """

    def __init__(self, ideal: Ideal, order: MonomialOrder = GREVLEX):
        self.ideal = ideal
        self.ring = ideal.ring
        self.order = order
        self.gb: GroebnerBasis = ideal.groebner(order)
        self.staircase = _staircase(self.gb, self.ring.nvars)
        self.index = {m: j for j, m in enumerate(self.staircase)}
        self.mult = [self._mult_matrix(i) for i in range(self.ring.nvars)]
        self._socle = None

    def __len__(self):
        return len(self.staircase)

    def coords(self, f: Polynomial) -> dict:
        """Staircase coordinates of ``f mod I``."""
        nf = self.gb.reduce(f)
        return {self.index[m]: c for m, c in nf.terms.items()}

    def element(self, vec: dict) -> Polynomial:
        return Polynomial(self.ring, {self.staircase[j]: c for j, c in vec.items() if c})

    def _mult_matrix(self, i: int) -> list[dict]:
        cols = []
        for s in self.staircase:
            m = s[:i] + (s[i] + 1,) + s[i + 1:]
            j = self.index.get(m)
            if j is not None:
                cols.append({j: self.ring.field.one})
            else:
                cols.append(self.coords(self.ring.monomial(m)))
        return cols

    def stacked_columns(self) -> list[dict]:
        """Column ``j`` of the matrix stacking all multiplication matrices."""
        return [
            {(i, r): c for i, mat in enumerate(self.mult) for r, c in mat[j].items()}
            for j in range(len(self.staircase))
        ]

    def socle_basis(self) -> list[dict]:
        """Basis (staircase coordinates) of the common kernel of ``mult``."""
        if self._socle is None:
            self._socle = kernel(self.stacked_columns(), self.ring.field)
        return self._socle

    def socle_dimension(self) -> int:
        return len(self.socle_basis())

    def matrices_commute(self) -> bool:
        n = len(self.staircase)
        for a in range(len(self.mult)):
            for b in range(a + 1, len(self.mult)):
                for j in range(n):
                    if _apply(self.mult[a], self.mult[b][j], self.ring.field) != \
                            _apply(self.mult[b], self.mult[a][j], self.ring.field):
                        return False
        return True


def _apply(mat: list[dict], vec: dict, field) -> dict:
    p = field.p
    out: dict = {}
    for j, c in vec.items():
        for r, v in mat[j].items():
            out[r] = out.get(r, 0) + c * v
    if p:
        return {r: v % p for r, v in out.items() if v % p}
    return {r: v for r, v in out.items() if v}


def _staircase(gb: GroebnerBasis, n: int) -> list:
    lms = gb.leading_monomials
    if any(not any(m) for m in lms):
        return []
    for i in range(n):
        if not any(m[i] > 0 and sum(m) == m[i] for m in lms):
            raise NotZeroDimensionalError("ideal is not zero-dimensional")
    start = (0,) * n
    seen = {start}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for i in range(n):
            m = s[:i] + (s[i] + 1,) + s[i + 1:]
            if m in seen:
                continue
            if any(all(a <= b for a, b in zip(lm, m)) for lm in lms):
                continue
            seen.add(m)
            queue.append(m)
    return sorted(seen, key=gb.order.key)


def quotient_basis(I: Ideal, order: MonomialOrder = GREVLEX) -> QuotientAlgebra:
    return QuotientAlgebra(I, order)


def colength(I: Ideal) -> int:
    """``dim_k P/I`` for zero-dimensional ``I``."""
    return len(_staircase(I.groebner(), I.ring.nvars))


def is_origin_primary(I: Ideal) -> bool:
    """True iff every variable is nilpotent modulo ``I``."""
    gb = I.groebner()
    D = colength(I)
    if D == 0:
        return True
    ring = I.ring
    return all(not gb.reduce(ring.var(i) ** D).terms for i in range(ring.nvars))


def _require_local(I: Ideal) -> None:
    if not is_origin_primary(I):
        raise NotOriginPrimaryError("quotient is not supported only at the origin")


def socle_dimension(I: Ideal, method: str = "matrix") -> int:
    """Socle dimension of ``P/I`` for an origin-primary zero-dimensional ``I``.

    ``method`` is ``"matrix"`` (common kernel of the multiplication
    matrices), ``"colon"`` (``colength(I) - colength(I : m)``) or ``"both"``,
    which computes both and raises if they disagree.
    """
    _require_local(I)
    if method == "matrix":
        return QuotientAlgebra(I).socle_dimension()
    if method == "colon":
        return socle_dimension_colon(I)
    if method == "both":
        a = QuotientAlgebra(I).socle_dimension()
        b = socle_dimension_colon(I)
        if a != b:
            raise ArithmeticError(f"socle routes disagree: matrix {a}, colon {b}")
        return a
    raise ValueError(f"unknown method {method!r}")


def socle_dimension_colon(I: Ideal) -> int:
    ring = I.ring
    if I.is_unit():
        return 0
    m = Ideal(ring, ring.gens())
    return colength(I) - colength(ideal_colon(I, m))


@dataclass(frozen=True)
class IndexResult:
    index: int
    is_parameter: bool
    colength: int


def index_of_reducibility(q: Sequence[Polynomial] | Ideal, A, require_parameter: bool = False,
                          method: str = "matrix") -> IndexResult:
    """Index of reducibility of ``q`` on ``A``: the socle dimension of ``A/q``.

    ``q`` is given by its generators (the relations of ``A`` are added
    here).  ``is_parameter`` records whether the generator count equals
    ``dim A``; cofiniteness and locality are always enforced.
    """
    gens = list(q.gens) if isinstance(q, Ideal) else [A.poly(g) for g in q]
    J = A.ideal(*gens)
    if ideal_dimension(J) > 0:
        raise NotZeroDimensionalError("q is not cofinite on A")
    if J.is_unit():
        raise ValueError("q generates the unit ideal")
    _require_local(J)
    is_param = len(gens) == A.dimension()
    if require_parameter and not is_param:
        raise ValueError(f"{len(gens)} generators but dim A = {A.dimension()}")
    qa = QuotientAlgebra(J)
    if method == "matrix":
        idx = qa.socle_dimension()
    else:
        idx = socle_dimension(J, method)
    return IndexResult(idx, is_param, len(qa))


def is_parameter_system(gens: Sequence[Polynomial], A) -> bool:
    """``len(gens) == dim A`` and ``A/(gens)`` is finite length at the origin."""
    if len(gens) != A.dimension():
        return False
    J = A.ideal(*gens)
    if J.is_unit() or ideal_dimension(J) != 0:
        return False
    return is_origin_primary(J)
