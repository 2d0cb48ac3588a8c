"""Local-cohomology invariants at desk scale and the low-dimension index formulas.

* ``H^0`` is realised as ``(I_A : m^inf) / I_A``.
* In dimension one, a principal reduction ``x`` of ``m`` and the least ``d``
  with ``m^d ∩ H^0 = 0`` give the bound ``ell = max(c, d) + 1`` past which
  every parameter ideal has index ``socdim(A) + type(A/H^0)``.
* In dimension ``d``, the kernel of ``A/q -> H^d`` is the sum of
  ``U_i + x_i A`` over ``q``, with ``U_i = ((x_1..^x_i..x_d) : x_i)``; the
  socle dimension of ``H^d`` is derived as ``index(q) - socdim(kernel)``.
* In dimension two with positive depth, ``H^1 ≅ ((a) : b + (b)) / (b)``.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Sequence

from .finlen import DEFAULT_CAP, FiniteLengthModule, NotFiniteLengthError, build_module
from .groebner import Ideal, ideal_colon, ideal_equal, ideal_intersect, saturate
from .poly import Polynomial
from .sampling import random_coeff
from .zerodim import index_of_reducibility, is_parameter_system, socle_dimension


class NotAParameterSystemError(ValueError):
    pass


# ---------------------------------------------------------------------------
# H^0 and dimension one


def h0_preimage(A) -> Ideal:
    """Preimage of ``H^0_m(A)``: the saturation ``(I_A : m^inf)``."""
    if A.defining_ideal.is_zero():
        return A.defining_ideal
    return saturate(A.defining_ideal, A.max_ideal)[0]


def h0_module(A, cap: int = DEFAULT_CAP) -> FiniteLengthModule:
    W = h0_preimage(A)
    try:
        return build_module(W, A.defining_ideal, cap)
    except NotFiniteLengthError as e:
        raise RuntimeError("H^0 is not of finite length: internal inconsistency") from e


def has_positive_depth(A) -> bool:
    return h0_module(A).length == 0


def principal_reduction(A, rng: random.Random | None = None, retries: int = 10,
                        cap: int = DEFAULT_CAP) -> tuple[Polynomial, int]:
    """A generic linear form ``x`` with ``m^(c+1) = x m^c``, and the least such ``c``."""
    if A.dimension() != 1:
        raise ValueError(f"principal reduction of m needs dim A = 1, got {A.dimension()}")
    if A.field.p and A.field.p < 100:
        warnings.warn(f"small field {A.field}: generic choices may fail", stacklevel=2)
    rng = rng or random.Random(0)
    tried = []
    for _ in range(retries):
        coeffs = [random_coeff(A.field, rng) for _ in range(A.nvars)]
        x = sum((c * v for c, v in zip(coeffs, A.gens())), A.ambient.zero)
        tried.append(coeffs)
        for c in range(cap + 1):
            power = A.max_ideal_power(c)
            lhs = A.max_ideal_power(c + 1)
            rhs = A.ideal(*(x * g for g in power.gens if g not in A.relations))
            if ideal_equal(lhs, rhs):
                return x, c
    raise RuntimeError(f"no principal reduction found; coefficients tried: {tried}")


def h0_vanishing_power(A, W: Ideal | None = None, cap: int = DEFAULT_CAP) -> int:
    """Least ``d`` with ``m^d ∩ H^0 = 0`` in ``A``."""
    W = h0_preimage(A) if W is None else W
    I_A = A.defining_ideal
    for d in range(cap + 1):
        inter = ideal_intersect(A.max_ideal_power(d), W) if d else W
        if I_A.contains_ideal(inter):
            return d
    raise RuntimeError(f"m^d ∩ H^0 still nonzero at d = {cap}")


@dataclass
class Dim1Certificate:
    W_preimage: Ideal
    c: int
    d: int
    ell: int
    socdim_A: int
    type_A_mod_W: int
    predicted_index: int
    reduction_element: Polynomial


def dim1_certificate(A, rng: random.Random | None = None) -> Dim1Certificate:
    """Bound ``ell`` and the predicted common index for a one-dimensional ``A``."""
    if A.dimension() != 1:
        raise ValueError(f"dim A = {A.dimension()}, expected 1")
    rng = rng or random.Random(0)
    W = h0_preimage(A)
    x, c = principal_reduction(A, rng)
    d = h0_vanishing_power(A, W)
    socdim_A = h0_module(A).socle_dim
    # A/W is Cohen-Macaulay, so any parameter computes its type
    cm_type = socle_dimension(W + Ideal(A.ambient, [x]))
    return Dim1Certificate(W, c, d, max(c, d) + 1, socdim_A, cm_type,
                           socdim_A + cm_type, x)


# ---------------------------------------------------------------------------
# kernel of A/q -> H^d, H^1 and H^d


def _require_parameters(xs, A):
    if not is_parameter_system(list(xs), A):
        raise NotAParameterSystemError("generators do not form a system of parameters of A")


def unmixed_component(q_minus_i: Sequence[Polynomial], x_i: Polynomial, A) -> Ideal:
    """``((q without x_i) + I_A) : x_i``."""
    _require_parameters(list(q_minus_i) + [x_i], A)
    return ideal_colon(A.ideal(*q_minus_i), x_i)


def unmixed_components(xs: Sequence[Polynomial], A) -> list[Ideal]:
    _require_parameters(xs, A)
    xs = list(xs)
    return [ideal_colon(A.ideal(*(xs[:i] + xs[i + 1:])), xs[i]) for i in range(len(xs))]


def kernel_module(xs: Sequence[Polynomial], A, cap: int = DEFAULT_CAP,
                  components: list[Ideal] | None = None) -> FiniteLengthModule:
    """``K = sum_i (U_i + x_i A) / q`` as a finite-length module."""
    xs = list(xs)
    U = components if components is not None else unmixed_components(xs, A)
    V = A.ideal(*xs)
    for u in U:
        V = V + u
    return build_module(V, A.ideal(*xs), cap)


def kernel_K_socdim(xs: Sequence[Polynomial], A, cap: int = DEFAULT_CAP) -> int:
    return kernel_module(xs, A, cap).socle_dim


def is_regular_element(f: Polynomial, A) -> bool:
    """``f`` is a nonzerodivisor on ``A``: ``(I_A : f) = I_A``."""
    return ideal_equal(ideal_colon(A.defining_ideal, f), A.defining_ideal)


@dataclass
class H1Realisation:
    """``H^1 ≅ H^0(A / b^n A)`` for the first ``n`` where the chain stabilises."""

    module: FiniteLengthModule
    regular: Polynomial
    power: int
    lengths: list

    @property
    def socle_dim(self) -> int:
        return self.module.socle_dim


def h1_module(a: Polynomial, b: Polynomial, A, cap: int = DEFAULT_CAP) -> H1Realisation:
    """Realise ``H^1(A)`` for ``dim A = 2`` from a parameter pair.

    With ``b`` regular on ``A`` (``a`` is used if ``b`` is not),
    ``H^0(A/b^n A) ≅ (0 :_{H^1} b^n)``, an increasing chain exhausting
    ``H^1``.  Two equal consecutive lengths certify that ``H^1`` has been
    reached; growth up to ``n = cap`` raises
    :class:`~socle_lab.finlen.NotFiniteLengthError`.  ``H^0`` of the
    one-dimensional ``A/b^n A`` is its ``a``-torsion, ``((b^n) : a^inf)``.
    """
    if A.dimension() != 2:
        raise ValueError(f"dim A = {A.dimension()}, expected 2")
    _require_parameters([a, b], A)
    if not is_regular_element(b, A):
        if not is_regular_element(a, A):
            raise ValueError("neither parameter is regular on A (depth 0?)")
        a, b = b, a
    other = Ideal(A.ambient, [a])
    lengths = []
    prev = None
    for n in range(1, cap + 2):
        J = A.ideal(b ** n)
        V = saturate(J, other, cap=4 * cap)[0]
        try:
            mod = build_module(V, J, cap)
        except NotFiniteLengthError:
            raise NotFiniteLengthError(
                cap, f"H^0(A/b^n A) exceeds the cap at n = {n}; lengths so far {lengths}"
            ) from None
        lengths.append(mod.length)
        if prev is not None and prev.length == mod.length:
            return H1Realisation(prev, b, n - 1, lengths)
        prev = mod
    raise NotFiniteLengthError(
        cap, f"lengths of H^0(A/b^n A) keep growing: {lengths[:4]}...{lengths[-2:]}")


def h1_socdim(a: Polynomial, b: Polynomial, A, cap: int = DEFAULT_CAP) -> int:
    """Socle dimension of ``H^1(A)``; raises ``NotFiniteLengthError`` when not finite."""
    return h1_module(a, b, A, cap).socle_dim


def h1_pair_module(a: Polynomial, b: Polynomial, A, Ua: Ideal | None = None,
                   cap: int = DEFAULT_CAP) -> FiniteLengthModule:
    """``(U_a + bA) / qA``, the summand of the kernel that is ``H^1`` for standard pairs."""
    Ua = ideal_colon(A.ideal(a), b) if Ua is None else Ua
    return build_module(Ua + A.ideal(b), A.ideal(a, b), cap)


def check_weak_sequence(xs: Sequence[Polynomial], A, bound: int = 3) -> bool:
    """Whether ``x_1^n_1, ..., x_d^n_d`` is a ``q``-weak sequence for all ``n_i <= bound``.

    That is ``((x_1^n_1..x_{i-1}^n_{i-1}) : x_i^n_i) ⊆ ((x_1^n_1..x_{i-1}^n_{i-1}) : q)``
    with ``q = (xs)``; a verdict of True only certifies exponents up to ``bound``.
    """
    xs = list(xs)
    _require_parameters(xs, A)
    q = Ideal(A.ambient, xs)
    d = len(xs)
    rhs_cache: dict = {}
    lhs_cache: dict = {}   # (prefix, n) -> (prefix ideal : x_i^n)
    for ns in product(range(1, bound + 1), repeat=d):
        for i in range(d):
            prefix = ns[:i]
            if (prefix, ns[i]) in lhs_cache:
                continue
            if prefix not in rhs_cache:
                base = A.ideal(*(x ** n for x, n in zip(xs, prefix)))
                rhs_cache[prefix] = (base, ideal_colon(base, q))
            base, rhs = rhs_cache[prefix]
            # (base : x^n) = ((base : x^(n-1)) : x)
            prev = base if ns[i] == 1 else lhs_cache.get((prefix, ns[i] - 1))
            if prev is None:
                prev = base
                for k in range(1, ns[i]):
                    prev = ideal_colon(prev, xs[i])
                    lhs_cache[(prefix, k)] = prev
            lhs = ideal_colon(prev, xs[i])
            lhs_cache[(prefix, ns[i])] = lhs
            if not rhs.contains_ideal(lhs):
                return False
    return True


def h2_socdim_derived(xs: Sequence[Polynomial], A, cap: int = DEFAULT_CAP) -> int:
    """``index(q) - socdim(K)``: the socle dimension of the top local cohomology."""
    idx = index_of_reducibility(list(xs), A).index
    k = kernel_K_socdim(xs, A, cap)
    if idx < k:
        raise ArithmeticError(f"index {idx} < socdim K {k}: q is not deep enough")
    return idx - k


@dataclass
class Dim2Report:
    a: Polynomial
    b: Polynomial
    Ua: Ideal
    Ub: Ideal
    index: int
    socdim_K: int
    socdim_H2_derived: int
    socdim_H1: int | None
    h1_error: str | None
    socdim_H1_pair: int
    standard: bool | None
    standard_checked_to: int
    direct_sum: bool | None = None
    colon_intersection: bool | None = None

    def formula_holds(self) -> bool:
        return self.socdim_H1 is not None and \
            self.index == 2 * self.socdim_H1 + self.socdim_H2_derived


def directness_checks(a: Polynomial, b: Polynomial, Ua: Ideal, Ub: Ideal, A) -> tuple[bool, bool]:
    """``(U_a + (b)) ∩ (U_b + (a)) = q`` and ``U_a ∩ U_b = (a) ∩ (b)``, in ``A``."""
    q = A.ideal(a, b)
    lhs = ideal_intersect(Ua + A.ideal(b), Ub + A.ideal(a))
    direct = ideal_equal(lhs, q)
    inter = ideal_intersect(Ua, Ub)
    target = ideal_intersect(A.ideal(a), A.ideal(b))
    return direct, ideal_equal(inter, target)


def dim2_report(a: Polynomial, b: Polynomial, A, bound: int = 3,
                cap: int = DEFAULT_CAP, check_standard: bool = True) -> Dim2Report:
    if A.dimension() != 2:
        raise ValueError(f"dim A = {A.dimension()}, expected 2")
    _require_parameters([a, b], A)
    Ua = ideal_colon(A.ideal(a), b)   # U_a = (aA : b)
    Ub = ideal_colon(A.ideal(b), a)
    idx = index_of_reducibility([a, b], A).index
    k = kernel_module([a, b], A, cap, components=[Ub, Ua]).socle_dim
    h1 = err = None
    try:
        h1 = h1_socdim(a, b, A, cap)
    except (NotFiniteLengthError, ValueError) as e:
        err = str(e)
    pair = h1_pair_module(a, b, A, Ua, cap).socle_dim
    standard = check_weak_sequence([a, b], A, bound) if check_standard else None
    rep = Dim2Report(a, b, Ua, Ub, idx, k, idx - k, h1, err, pair, standard,
                     bound if check_standard else 0)
    if standard:
        rep.direct_sum, rep.colon_intersection = directness_checks(a, b, Ua, Ub, A)
    return rep


# ---------------------------------------------------------------------------
# lower bound witnesses


def gs_target(socdims: Sequence[int]) -> int:
    """``sum_i binom(d, i) * socdim H^i`` for socle dimensions ``H^0..H^d``."""
    d = len(socdims) - 1
    return sum(comb(d, i) * s for i, s in enumerate(socdims))


@dataclass
class GSWitness:
    target: int
    exponents: tuple | None
    index: int | None
    tried: list = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.exponents is not None


def gs_lower_bound_witness(xs: Sequence[Polynomial], A, target: int,
                           max_exp: int = 6) -> GSWitness:
    """First exponent tuple (lexicographic) with ``index((x_i^n_i)) >= target``."""
    xs = list(xs)
    _require_parameters(xs, A)
    tried = []
    for ns in product(range(1, max_exp + 1), repeat=len(xs)):
        idx = index_of_reducibility([x ** n for x, n in zip(xs, ns)], A).index
        tried.append((ns, idx))
        if idx >= target:
            return GSWitness(target, ns, idx, tried)
    return GSWitness(target, None, None, tried)
