"""Seeded generic elements and parameter ideals inside powers of m."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .poly import Polynomial, monomials_of_degree
from .zerodim import is_parameter_system


def random_coeff(field, rng: random.Random, nonzero: bool = True):
    if field.p:
        return rng.randrange(1 if nonzero else 0, field.p)
    c = 0
    while nonzero and c == 0:
        c = rng.randint(-9, 9)
    return field(c)


def random_form(A, degree: int, rng: random.Random) -> Polynomial:
    """Random combination of all monomials of the given degree."""
    ring = A.ambient
    terms = {}
    for m in monomials_of_degree(ring.nvars, degree):
        c = random_coeff(ring.field, rng, nonzero=False)
        if c:
            terms[m] = c
    return Polynomial(ring, terms)


def random_parameter_ideal(A, ell: int, rng: random.Random, tries: int = 50) -> list[Polynomial]:
    """``dim A`` random forms of degree ``ell`` forming a parameter ideal."""
    d = A.dimension()
    for _ in range(tries):
        gens = [random_form(A, ell, rng) for _ in range(d)]
        if all(g.terms for g in gens) and is_parameter_system(gens, A):
            return gens
    raise RuntimeError(f"no parameter ideal in m^{ell} found after {tries} draws")


def family_parameter_ideals(A, ell: int) -> Iterator[tuple[str, list[Polynomial]]]:
    """Deterministic parameter ideals in ``m^ell``.

    For each ordered choice of ``d`` variables: the pure powers, and (when
    ``d >= 2``) the family ``((u+v)^ell, u*v^(ell-1), rest^ell)``.
    """
    d = A.dimension()
    if d < 1:
        return
    gens = A.gens()
    names = A.names
    for idx in combinations(range(A.nvars), d):
        vs = [gens[i] for i in idx]
        label = ",".join(names[i] for i in idx)
        powers = [v ** ell for v in vs]
        if is_parameter_system(powers, A):
            yield f"powers({label})", powers
        if d >= 2:
            u, v = vs[0], vs[1]
            twisted = [(u + v) ** ell, u * v ** (ell - 1)] + powers[2:]
            if is_parameter_system(twisted, A):
                yield f"twisted({label})", twisted
