import pytest

from gen import shift_instances, split_instances
from socle_lab.groebner import ideal_dimension, ideal_equal
from socle_lab.idealize import (
    NotIrreducibleError, idealize_cyclic, index_shift_check, socle_split_check,
)
from socle_lab.ring import RingPresentation
from socle_lab.zerodim import colength


def test_construction(plane, gf):
    spec = idealize_cyclic(plane, ["x^2"])
    T = spec.result
    assert T.names == ("x", "y", "w")
    assert ideal_equal(T.defining_ideal, T.ideal("x^2*w, w^2"))
    assert ideal_dimension(T.defining_ideal) == 2
    line = RingPresentation(gf, "x")
    spec = idealize_cyclic(line, [])
    assert ideal_equal(spec.result.defining_ideal, spec.result.ideal("w^2"))
    R3 = RingPresentation(gf, ["x", "y", "z3"])
    assert idealize_cyclic(R3, ["x^2"]).result.dimension() == 3
    with pytest.raises(ValueError):
        idealize_cyclic(plane, ["x + 1", "x"])


def test_fresh_variable_name(gf):
    R = RingPresentation(gf, ["x", "w"])
    assert idealize_cyclic(R, ["x"]).result.names == ("x", "w", "w_")


def test_socle_split_examples(plane, gf):
    line = RingPresentation(gf, "x")
    r = socle_split_check(idealize_cyclic(line, ["x"]), ["x^2"])
    assert (r.lhs, r.rhs, r.equal) == (2, 2, True)
    # M = R: the intersection term vanishes unless R is the field itself
    r = socle_split_check(idealize_cyclic(line, []), ["x^3"])
    assert r.socle_ann_dim == 0 and r.rhs == 1 and r.equal
    r = socle_split_check(idealize_cyclic(line, []), ["x"])
    assert r.socle_ann_dim == 0 and r.lhs == 1
    r = socle_split_check(idealize_cyclic(plane, ["x"]), ["x^2, x*y, y^2"])
    assert r.equal
    with pytest.raises(ValueError):
        socle_split_check(idealize_cyclic(plane, ["x"]), ["x^2"])


def test_index_shift_examples(plane, gf):
    r = index_shift_check(plane, ["x^3", "y^3"], ["x^2"])
    assert (r.idx_M, r.idx_A) == (1, 2) and r.equal_plus_one
    r = index_shift_check(plane, ["(x+y)^3", "x*y^2"], ["x^2"])
    assert (r.idx_M, r.idx_A) == (2, 3) and r.equal_plus_one
    line = RingPresentation(gf, "x")
    r = index_shift_check(line, ["x^3"], ["x^2"])
    assert (r.idx_M, r.idx_A) == (1, 2)
    with pytest.raises(NotIrreducibleError):
        index_shift_check(plane, ["x^2", "x*y", "y^2"], ["x"])
    with pytest.raises(ValueError):
        index_shift_check(plane, ["x^2", "y^3"], ["x^2"])


@pytest.mark.parametrize("case", range(50))
def test_index_shift_random(case, _instances=shift_instances()):
    R, q, J = _instances[case]
    assert index_shift_check(R, q, J).equal_plus_one


@pytest.mark.parametrize("case", range(50))
def test_socle_split_random(case, _instances=split_instances()):
    R, I, J = _instances[case]
    spec = idealize_cyclic(R, J)
    assert socle_split_check(spec, I).equal
    # length of the idealization quotient = length(R/I) + length(M/IM)
    lhs = colength(spec.result.ideal(*(spec.lift(g) for g in R._flatten(I))))
    assert lhs == colength(R.ideal(*I)) + colength(R.ideal(*I) + spec.module_ideal)
