from .monomial import (
    GENERATOR_MONOMIALS,
    IDENTITY,
    Generator,
    Monomial,
    monomials_of_degree,
    monomials_up_to_length,
    mul_monomials,
    star_monomial,
)
from .element import (
    ALPHA,
    ALPHA_STAR,
    GAMMA,
    GAMMA_STAR,
    MIXED,
    ONE_ELEMENT,
    ZERO_DEGREE,
    AlgebraElement,
    TensorElement,
    element_sum,
)
from .rewriting import RULES, normal_form
from .hopf import (
    antipode,
    coaction,
    coproduct,
    coproduct_monomial,
    counit,
    counit_monomial,
    in_sphere,
)

X_ELEMENT = GAMMA * GAMMA_STAR


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b


def star(a: AlgebraElement) -> AlgebraElement:
    return a.star()


def degree(a: AlgebraElement):
    return a.degree()
