import random

import pytest

from gen import random_monomial_ideal
from socle_lab.field import Field
from socle_lab.groebner import ideal_equal, ideal_intersect
from socle_lab.monomial_decomp import (
    MonomialIdeal, NotArtinianError, irreducible_decomposition, verify_irredundant,
)
from socle_lab.ring import RingPresentation
from socle_lab.zerodim import socle_dimension

M = MonomialIdeal.from_monomials


def test_examples():
    I = M([(2, 0, 0), (1, 3, 0), (0, 4, 0), (0, 0, 4)])
    comps = irreducible_decomposition(I)
    assert set(comps) == {M([(2, 0, 0), (0, 3, 0), (0, 0, 4)]), M([(1, 0, 0), (0, 4, 0), (0, 0, 4)])}
    assert verify_irredundant(comps, I)
    box = M([(3, 0), (0, 5)])
    assert irreducible_decomposition(box) == [box]
    I = M([(2, 0), (1, 1), (0, 2)])
    comps = irreducible_decomposition(I)
    assert set(comps) == {M([(2, 0), (0, 1)]), M([(1, 0), (0, 2)])}
    assert verify_irredundant(comps, I)
    assert not verify_irredundant(comps + comps[:1], I)
    assert not verify_irredundant(comps[:1], I)


def test_minimalization_and_errors():
    I = M([(2, 0), (3, 1), (2, 2), (0, 1)])
    assert I.generators == ((0, 1), (2, 0))
    with pytest.raises(NotArtinianError):
        irreducible_decomposition(M([(2, 0), (1, 1)]))


@pytest.mark.parametrize("seed", range(100))
def test_random_against_socle(seed):
    rng = random.Random(seed)
    n = 2 + seed % 2
    I = M(random_monomial_ideal(n, rng))
    comps = irreducible_decomposition(I)
    A = RingPresentation(Field.prime(), "xyz"[:n])
    ideal = I.to_ideal(A)
    assert len(comps) == socle_dimension(ideal)
    assert all(c.is_irreducible() and c.is_artinian() and len(c.generators) == n for c in comps)
    meet = comps[0].to_ideal(A)
    for c in comps[1:]:
        meet = ideal_intersect(meet, c.to_ideal(A))
    assert ideal_equal(meet, ideal)
    assert verify_irredundant(comps, I)
