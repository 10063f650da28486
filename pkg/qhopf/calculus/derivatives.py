"""The differential d: SU_q(2) → Ω¹ and its components ∂₋, ∂₀, ∂₊.

``differential`` runs the Leibniz recursion d(M'g) = d(M')·g + M'·d(g) over
PBW words, moving η's past g through ``eta_times``. ``differential_by_coproduct``
is the defining formula d(a) = a⁽¹⁾π(a⁽²⁾) and is kept as the reference path.
"""

from functools import lru_cache
from typing import Tuple

from ..coefficients import ScalarQ, q_int
from ..quantum_group import AlgebraElement, Monomial, coproduct, coproduct_monomial
from .forms import BASIS_NAMES, InvariantForm, TotalForm1
from .germs import circ_monomial, germ_monomial, get_germs_data


def _invariant_coefficients(pairs) -> TotalForm1:
    """Σ c·m₁·θ for an iterable of (m₁, θ, c) into left-trivialized form."""
    parts = {name: {} for name in BASIS_NAMES}
    for m1, theta, c in pairs:
        for name, value in zip(BASIS_NAMES, theta.components()):
            if value.is_zero():
                continue
            bucket = parts[name]
            bucket[m1] = bucket[m1] + c * value if m1 in bucket else c * value
    return TotalForm1(*(AlgebraElement(parts[name]) for name in BASIS_NAMES))


@lru_cache(maxsize=None)
def eta_times_monomial(name: str, m: Monomial) -> TotalForm1:
    return _invariant_coefficients(
        (m1, circ_monomial(InvariantForm.basis(name), m2), c)
        for (m1, m2), c in coproduct_monomial(m).items()
    )


def eta_times(name: str, b: AlgebraElement) -> TotalForm1:
    """η_name·b = b⁽¹⁾·(η_name∘b⁽²⁾) in left-trivialized coordinates."""
    total = TotalForm1()
    for m, c in b.items():
        total = total + eta_times_monomial(name, m).scale(c)
    return total


@lru_cache(maxsize=None)
def character(name: str, m: Monomial) -> ScalarQ:
    """f_name(M) for the diagonal circ table: η_name∘M = f_name(M)·η_name."""
    data = get_germs_data()
    value = ScalarQ(1)
    for g in m.word():
        value = value * data.character(name, g)
    return value


def twist(name: str, b: AlgebraElement) -> AlgebraElement:
    """(id ⊗ f_name)φ(b), so that η_name·b = twist(name, b)·η_name."""
    return coproduct(b).apply_right(lambda m: character(name, m))


@lru_cache(maxsize=None)
def differential_monomial(m: Monomial) -> TotalForm1:
    if m.is_identity():
        return TotalForm1()
    rest, last = m.split_last()
    d_last = _generator_differential(last)
    if rest.is_identity():
        return d_last
    head = differential_monomial(rest).right_multiply(
        AlgebraElement.generator(last), eta_times
    )
    return head + d_last.left_multiply(AlgebraElement.from_monomial(rest))


@lru_cache(maxsize=None)
def _generator_differential(g) -> TotalForm1:
    return differential_by_coproduct(AlgebraElement.generator(g))


def differential(a: AlgebraElement) -> TotalForm1:
    """d(a) = ∂₋(a)η₋ + ∂₀(a)η₀ + ∂₊(a)η₊."""
    total = TotalForm1()
    for m, c in a.items():
        total = total + differential_monomial(m).scale(c)
    return total


def differential_by_coproduct(a: AlgebraElement) -> TotalForm1:
    return _invariant_coefficients(
        (m1, germ_monomial(m2), c) for (m1, m2), c in coproduct(a).items()
    )


def horizontal(phi: TotalForm1) -> TotalForm1:
    return phi.horizontal()


def partial_minus(a: AlgebraElement) -> AlgebraElement:
    return differential(a).minus


def partial_zero(a: AlgebraElement) -> AlgebraElement:
    return differential(a).zero


def partial_plus(a: AlgebraElement) -> AlgebraElement:
    return differential(a).plus


def partial_bar_plus(a: AlgebraElement) -> AlgebraElement:
    """∂̄₊(a) = (∂₋(a*))*."""
    return partial_minus(a.star()).star()


def partial_bar_minus(a: AlgebraElement) -> AlgebraElement:
    """∂̄₋(a) = (∂₊(a*))*."""
    return partial_plus(a.star()).star()


def horizontal_derivative(a: AlgebraElement) -> Tuple[AlgebraElement, AlgebraElement]:
    """D(a) as the pair (∂₋a, ∂₊a) of η₋ and η₊ coefficients."""
    d = differential(a)
    return d.minus, d.plus


def commutator_scalar(n: int) -> ScalarQ:
    """μ_n with ∂₋∂₊ − q²∂₊∂₋ = μ_n on degree n."""
    return -ScalarQ.q_power(3 - 2 * n) * q_int(n)
