import random

import pytest

from gen import random_origin_primary
from oracles import dense_socle, monomial_staircase_count
from socle_lab.ring import RingPresentation
from socle_lab.sampling import random_parameter_ideal
from socle_lab.zerodim import (
    NotOriginPrimaryError, NotZeroDimensionalError, QuotientAlgebra, colength,
    index_of_reducibility, is_origin_primary, is_parameter_system, quotient_basis,
    socle_dimension, socle_dimension_colon,
)


def I(A, text):
    return A.ideal(text)


def test_staircase_examples(plane, example2):
    qa = quotient_basis(I(plane, "x^2, x*y, y^3"))
    assert sorted(qa.staircase) == sorted([(0, 0), (1, 0), (0, 1), (0, 2)])
    assert quotient_basis(I(plane, "x, y")).staircase == [(0, 0)]
    J = I(example2, "x^3, y^3")
    count = monomial_staircase_count([(2, 0, 1), (0, 0, 2), (3, 0, 0), (0, 3, 0)], (3, 3, 2))
    assert len(quotient_basis(J)) == count == 15


def test_colength_examples(plane, gf):
    assert colength(I(plane, "x^2, x*y, y^3")) == 4
    for a, b in ((1, 1), (2, 5), (4, 3)):
        assert colength(I(plane, f"x^{a}, y^{b}")) == a * b
    B = RingPresentation(gf, "xyuv")
    m2 = B.max_ideal_power(2)
    assert colength(m2) == 1 + 4


def test_origin_primary_examples(plane):
    assert is_origin_primary(I(plane, "x^2, x*y, y^3"))
    assert not is_origin_primary(I(plane, "x - 1, y"))
    assert is_origin_primary(I(plane, "(x+y)^3, x*y^2"))


def test_socle_examples(plane, gf):
    J = I(plane, "x^2, x*y, y^3")
    assert socle_dimension(J, "both") == 2
    assert {tuple(sorted(v)) for v in QuotientAlgebra(J).socle_basis()} != set()
    for a, b in ((1, 1), (3, 4), (6, 2)):
        assert socle_dimension(I(plane, f"x^{a}, y^{b}"), "both") == 1
    B = RingPresentation(gf, "xyuv")
    assert socle_dimension(B.max_ideal_power(2), "both") == 4


def test_index_examples(plane, example2):
    for n, m in ((1, 1), (3, 5), (4, 2)):
        assert index_of_reducibility([f"x^{n}", f"y^{m}"], plane).index == 1
    assert index_of_reducibility(["x^3", "y^3"], example2).index == 2
    r = index_of_reducibility(["(x+y)^3", "x*y^2"], example2, require_parameter=True)
    assert r.index == 3 and r.is_parameter


def test_errors(plane):
    with pytest.raises(NotZeroDimensionalError):
        socle_dimension(I(plane, "x^2"))
    with pytest.raises(NotOriginPrimaryError):
        socle_dimension(I(plane, "x^2 - x, y"))
    with pytest.raises(NotZeroDimensionalError):
        index_of_reducibility(["x^3"], plane)
    with pytest.raises(ValueError):
        index_of_reducibility(["x^2", "y^2", "x*y"], plane, require_parameter=True)
    assert not is_parameter_system([plane.poly("x - 1"), plane.poly("y")], plane)


@pytest.mark.parametrize("seed", range(30))
def test_routes_agree_with_dense_oracle(seed, gf):
    rng = random.Random(seed)
    A = RingPresentation(gf, "xyz"[: 2 + seed % 2])
    gens = random_origin_primary(A.ambient, rng)
    J = A.ideal(*gens)
    qa = QuotientAlgebra(J)
    assert qa.matrices_commute()
    length, soc = dense_socle(gens, A.nvars, gf.p)
    assert len(qa) == length
    assert qa.socle_dimension() == socle_dimension_colon(J) == soc


def test_box_colength(plane, gf):
    rng = random.Random(7)
    C = RingPresentation(gf, "xyz")
    for _ in range(10):
        exps = [rng.randint(1, 5) for _ in range(3)]
        J = C.ideal(*(f"{v}^{e}" for v, e in zip("xyz", exps)))
        assert colength(J) == exps[0] * exps[1] * exps[2]


@pytest.mark.parametrize("seed", range(5))
def test_gorenstein_hypersurface_constancy(seed, gf):
    A = RingPresentation(gf, "xy", ["x*y"])
    rng = random.Random(seed)
    for ell in (1, 2, 3):
        q = random_parameter_ideal(A, ell, rng)
        assert index_of_reducibility(q, A).index == 1
