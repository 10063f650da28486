"""Differential, integral, metric and Hodge stars of the quantum sphere.

Every operation that depends on a calibrated constant takes an optional
``conventions`` argument; when omitted, the calibrated defaults from
``qhopf.sphere.conventions.get_conventions`` are used.
"""

from fractions import Fraction

from ..calculus.derivatives import differential, twist
from ..coefficients import ScalarQ
from ..errors import DegreeError
from ..haar import haar
from ..quantum_group import AlgebraElement
from .forms import BaseForm

HALF = ScalarQ(Fraction(1, 2))
Q2 = ScalarQ.q_power(2)


def _conventions(conventions):
    if conventions is None:
        from .conventions import get_conventions

        return get_conventions()
    return conventions


def base_d(phi: BaseForm, conventions=None) -> BaseForm:
    """The exterior derivative of S²_q.

    Grade 0 maps to (∂₋f)η₋ + (∂₊f)η₊, grade 1 to (κ₊∂₊x + κ₋∂₋y)·dvol and
    grade 2 to zero (there are no 3-forms, so a grade-2 input yields the zero
    grade-2 form).
    """
    if phi.grade == 0:
        d = differential(phi.f0)
        return BaseForm.one_form(d.minus, d.plus)
    if phi.grade == 1:
        conv = _conventions(conventions)
        top = differential(phi.x).plus.scale(conv.kappa_plus) + differential(
            phi.y
        ).minus.scale(conv.kappa_minus)
        return BaseForm.two_form(top)
    return BaseForm.zero(2)


def integral(phi: BaseForm) -> ScalarQ:
    """∫ p·dvol = h(p)."""
    if phi.grade != 2:
        raise DegreeError(f"only 2-forms can be integrated, got grade {phi.grade}")
    return haar(phi.p)


def metric(phi_hat: BaseForm, phi: BaseForm) -> AlgebraElement:
    """The S²_q-valued pairing ⟨φ̂, φ⟩, conjugate-linear in φ."""
    if phi_hat.grade != phi.grade:
        raise DegreeError(f"metric of grades {phi_hat.grade} and {phi.grade}")
    if phi.grade == 0:
        return phi_hat.f0 * phi.f0.star()
    if phi.grade == 1:
        return (
            (phi_hat.x * phi.x.star()).scale(Q2) + phi_hat.y * phi.y.star()
        ).scale(HALF)
    return phi_hat.p * phi.p.star()


def global_inner(phi_hat: BaseForm, phi: BaseForm) -> ScalarQ:
    return haar(metric(phi_hat, phi))


def form_star(phi: BaseForm, conventions=None) -> BaseForm:
    """The involution of Ω^•(S²_q).

    On 1-forms (xη₋ + yη₊)* = η₋*x* + η₊*y*, with η₋* and η₊* taken from the
    conventions and the η's moved back to the right of their coefficients.
    """
    if phi.grade == 0:
        return BaseForm.zero_form(phi.f0.star())
    if phi.grade == 2:
        # dvol* = dvol and dvol commutes with degree-0 elements
        return BaseForm.two_form(phi.p.star())
    conv = _conventions(conventions)
    eta_minus_star, eta_plus_star = conv.eta_star_factors()
    return BaseForm.one_form(
        twist("minus", phi.y.star()).scale(eta_plus_star),
        twist("plus", phi.x.star()).scale(eta_minus_star),
    )


def hodge_left(phi: BaseForm) -> BaseForm:
    """⋆_L: p ↦ p*dvol, p·dvol ↦ p*, xη₋ + yη₊ ↦ ½(−y*η₋ + x*η₊)."""
    if phi.grade == 0:
        return BaseForm.two_form(phi.f0.star())
    if phi.grade == 2:
        return BaseForm.zero_form(phi.p.star())
    return BaseForm.one_form(phi.y.star().scale(-HALF), phi.x.star().scale(HALF))


def hodge_right(phi: BaseForm, conventions=None) -> BaseForm:
    """⋆_R φ := (⋆_L(φ*))*."""
    return form_star(hodge_left(form_star(phi, conventions)), conventions)


def wedge(phi: BaseForm, psi: BaseForm, conventions=None) -> BaseForm:
    """φ∧ψ for two 1-forms, using η₋η₋ = η₊η₊ = 0 and η₊η₋ = ρ·η₋η₊."""
    if phi.grade != 1 or psi.grade != 1:
        raise DegreeError(f"wedge needs two 1-forms, got {phi.grade} and {psi.grade}")
    conv = _conventions(conventions)
    top = phi.x * twist("minus", psi.y) + (phi.y * twist("plus", psi.x)).scale(
        conv.wedge_exchange
    )
    return BaseForm.two_form(top.scale(conv.wedge_scale))


def _codifferential(phi: BaseForm, conv) -> BaseForm:
    if phi.grade == 0:
        raise DegreeError("the codifferential is not defined on functions")
    sign = conv.s1 if phi.grade == 1 else conv.s2
    return hodge_left(base_d(hodge_left(phi), conv)).scale(sign)


def codifferential_left(phi: BaseForm, conventions=None) -> BaseForm:
    """d^{⋆L} = s_k·⋆_L d ⋆_L, the adjoint of d for ``global_inner``."""
    return _codifferential(phi, _conventions(conventions))


def codifferential_right(phi: BaseForm, conventions=None) -> BaseForm:
    """d^{⋆R}ψ := (d^{⋆L}(ψ*))*."""
    conv = _conventions(conventions)
    return form_star(_codifferential(form_star(phi, conv), conv), conv)


def laplacian0(phi: BaseForm, conventions=None) -> BaseForm:
    """The Laplace–de Rham operator d^{⋆L}d on functions."""
    if phi.grade != 0:
        raise DegreeError(f"laplacian0 acts on functions, got grade {phi.grade}")
    conv = _conventions(conventions)
    return _codifferential(base_d(phi, conv), conv)

