"""Idealization ``R ⋉ R/J`` of a ring by a cyclic module, and checks of its socle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .groebner import Ideal, ideal_dimension
from .linalg import Echelon, span_intersection_dim
from .poly import Polynomial
from .ring import RingPresentation
from .zerodim import (
    NotOriginPrimaryError,
    QuotientAlgebra,
    is_origin_primary,
    socle_dimension,
)


class NotIrreducibleError(ValueError):
    pass


@dataclass
class IdealizationSpec:
    """``result = base[w] / (I_R + J*w + w^2)`` presents ``base ⋉ base/J``."""

    base: RingPresentation
    module_ideal: Ideal
    result: RingPresentation
    w: str

    def lift(self, f: Polynomial) -> Polynomial:
        """Image of an element of the base ambient ring in the result's."""
        return f.embed(self.result.ambient, range(self.base.nvars))


def idealize_cyclic(R: RingPresentation, J: Ideal | Sequence, w: str = "w") -> IdealizationSpec:
    """Present the idealization of ``R`` with ``M = R/J``."""
    if not isinstance(J, Ideal):
        J = Ideal(R.ambient, R._flatten(J))
    if (J + R.defining_ideal).is_unit():
        raise ValueError("J is the unit ideal: the module R/J is zero")
    while w in R.names:
        w += "_"
    names = R.names + (w,)
    ring = RingPresentation(R.field, names)
    pos = range(R.nvars)
    wv = ring.ambient.var(w)
    rels = [r.embed(ring.ambient, pos) for r in R.relations]
    rels += [g.embed(ring.ambient, pos) * wv for g in J.gens]
    rels.append(wv ** 2)
    return IdealizationSpec(R, J, RingPresentation(R.field, names, rels), w)


@dataclass(frozen=True)
class SocleSplit:
    lhs: int
    rhs: int
    socdim_M: int
    socle_ann_dim: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def socle_split_check(spec: IdealizationSpec, artinian: Sequence | Ideal) -> SocleSplit:
    """Compare both sides of ``soc(A) = soc(R) ∩ ann(M) + soc(M)`` after passing to
    ``R̄ = R/I``, ``M̄ = M/IM``.

    ``lhs`` is the socle dimension of ``A/IA`` computed in the idealization;
    ``rhs`` is ``socdim(M̄) + dim(soc(R̄) ∩ ann(M̄))`` computed in ``R̄``.
    """
    R = spec.base
    gens = list(artinian.gens) if isinstance(artinian, Ideal) else R._flatten(artinian)
    Ibar = R.ideal(*gens)
    if ideal_dimension(Ibar) != 0:
        raise ValueError("R/I is not artinian")
    if not is_origin_primary(Ibar):
        raise NotOriginPrimaryError("R/I is not local at the origin")
    lhs = socle_dimension(spec.result.ideal(*(spec.lift(g) for g in gens)))
    socdim_M = socle_dimension(Ibar + spec.module_ideal)
    # soc(R̄) ∩ ann(M̄), with ann(M̄) = (J + I)/I, inside the staircase of R̄
    qa = QuotientAlgebra(Ibar)
    socle = qa.socle_basis()
    ann = Echelon(R.field)
    for g in spec.module_ideal.gens:
        for s in qa.staircase:
            ann.add(qa.coords(g.mul_term(s)))
    both = span_intersection_dim(socle, ann.basis(), R.field)
    return SocleSplit(lhs, socdim_M + both, socdim_M, both)


@dataclass(frozen=True)
class IndexShift:
    idx_A: int
    idx_M: int

    @property
    def equal_plus_one(self) -> bool:
        return self.idx_A == self.idx_M + 1


def index_shift_check(R: RingPresentation, q: Sequence, J: Ideal | Sequence,
                      spec: IdealizationSpec | None = None) -> IndexShift:
    """``index(qA; A)`` against ``index(q; R/J) + 1`` for an irreducible ``q ⊉ J``."""
    spec = spec or idealize_cyclic(R, J)
    gens = R._flatten(q)
    Q = R.ideal(*gens)
    if ideal_dimension(Q) != 0 or not is_origin_primary(Q):
        raise NotOriginPrimaryError("q is not primary to the maximal ideal")
    if socle_dimension(Q) != 1:
        raise NotIrreducibleError("q is not irreducible (socle dimension != 1)")
    gbq = Q.groebner()
    if all(gbq.contains(g) for g in spec.module_ideal.gens):
        raise ValueError("q contains ann(M) = J")
    idx_A = socle_dimension(spec.result.ideal(*(spec.lift(g) for g in gens)))
    idx_M = socle_dimension(Q + spec.module_ideal)
    return IndexShift(idx_A, idx_M)
