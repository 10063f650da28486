"""Hopf *-algebra structure of SU_q(2) and its U(1) coaction.

Coproduct and antipode are computed per PBW monomial by peeling off the
last generator (``Monomial.split_last``) and memoized, which keeps repeated
evaluation over a filtration cheap.
"""

from functools import lru_cache
from typing import Dict

from ..coefficients import ONE, ZERO, ScalarQ
from .element import (
    ALPHA,
    ALPHA_STAR,
    GAMMA,
    GAMMA_STAR,
    ONE_ELEMENT,
    AlgebraElement,
    TensorElement,
)
from .monomial import IDENTITY, Generator, Monomial

_Q = ScalarQ.q_power(1)

GENERATOR_COPRODUCTS = {
    Generator.ALPHA: TensorElement.pure(ALPHA, ALPHA)
    - TensorElement.pure(GAMMA_STAR, GAMMA).scale(_Q),
    Generator.GAMMA: TensorElement.pure(GAMMA, ALPHA)
    + TensorElement.pure(ALPHA_STAR, GAMMA),
    Generator.ALPHA_STAR: TensorElement.pure(ALPHA_STAR, ALPHA_STAR)
    - TensorElement.pure(GAMMA, GAMMA_STAR).scale(_Q),
    Generator.GAMMA_STAR: TensorElement.pure(GAMMA_STAR, ALPHA_STAR)
    + TensorElement.pure(ALPHA, GAMMA_STAR),
}

GENERATOR_ANTIPODES = {
    Generator.ALPHA: ALPHA_STAR,
    Generator.ALPHA_STAR: ALPHA,
    Generator.GAMMA: GAMMA.scale(-_Q),
    Generator.GAMMA_STAR: GAMMA_STAR.scale(-ScalarQ.q_power(-1)),
}


@lru_cache(maxsize=None)
def coproduct_monomial(m: Monomial) -> TensorElement:
    if m.is_identity():
        return TensorElement({(IDENTITY, IDENTITY): ONE})
    rest, last = m.split_last()
    return coproduct_monomial(rest) * GENERATOR_COPRODUCTS[last]


def coproduct(a: AlgebraElement) -> TensorElement:
    """φ(a), extended multiplicatively from φ(α) = α⊗α − qγ*⊗γ and friends."""
    total = TensorElement()
    for m, c in a.items():
        total = total + coproduct_monomial(m).scale(c)
    return total


def counit_monomial(m: Monomial) -> ScalarQ:
    return ONE if m.k == 0 and m.l == 0 else ZERO


def counit(a: AlgebraElement) -> ScalarQ:
    """ε(a); ε(α) = ε(α*) = 1 and ε(γ) = ε(γ*) = 0."""
    return a.apply_functional(counit_monomial)


@lru_cache(maxsize=None)
def antipode_monomial(m: Monomial) -> AlgebraElement:
    if m.is_identity():
        return ONE_ELEMENT
    rest, last = m.split_last()
    return GENERATOR_ANTIPODES[last] * antipode_monomial(rest)


def antipode(a: AlgebraElement) -> AlgebraElement:
    """κ(a), the antihomomorphism with κ(α) = α*, κ(γ) = −qγ, κ(γ*) = −q⁻¹γ*."""
    return a.map_terms(antipode_monomial)


def coaction(a: AlgebraElement) -> Dict[int, AlgebraElement]:
    """Components of a under Φ = (id ⊗ j)∘φ, keyed by U(1) weight.

    Φ(α) = α ⊗ z and Φ(γ) = γ ⊗ z, so the weight of a monomial is its degree.
    """
    return a.homogeneous_components()


def in_sphere(a: AlgebraElement) -> bool:
    """True iff Φ(a) = a ⊗ 𝟙, i.e. a lies in the quantum sphere."""
    return all(n == 0 for n in coaction(a))
