"""Sections, bundle-valued 1-forms and the two covariant derivatives.

Sections of the winding-n bundle are degree-n elements of SU_q(2). The left
derivative carries the winding twist q^n and pairs sections by h(ŝs*); the
right one is untwisted and pairs sections by h(s*ŝ).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..calculus import get_canonical_connection, horizontal_derivative, twist
from ..coefficients import ScalarQ
from ..errors import DegreeError
from ..haar import haar
from ..quantum_group import AlgebraElement
from ..sphere import BaseForm, form_star

SIDES = ("left", "right")

HALF = ScalarQ(Fraction(1, 2))
Q2 = ScalarQ.q_power(2)


def check_side(side: str) -> str:
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    return side


@dataclass(frozen=True)
class Section:
    """A section T of the winding-n bundle, stored as T(𝟙)."""

    n: int
    value: AlgebraElement

    def __post_init__(self):
        if not self.value.is_homogeneous(self.n):
            raise DegreeError(
                f"section of winding {self.n} has degree {self.value.degree()}"
            )

    @classmethod
    def of(cls, value: AlgebraElement) -> "Section":
        n = value.degree()
        if not isinstance(n, int):
            raise DegreeError(f"cannot infer the winding of {value.to_text()}")
        return cls(n, value)

    def star(self) -> "Section":
        return Section(-self.n, self.value.star())


@dataclass(frozen=True)
class BundleForm:
    """xη₋ + yη₊ with values in the winding-n bundle (deg x = n+2, deg y = n−2)."""

    n: int
    x: AlgebraElement = AlgebraElement()
    y: AlgebraElement = AlgebraElement()

    def __post_init__(self):
        if not self.x.is_homogeneous(self.n + 2) or not self.y.is_homogeneous(self.n - 2):
            raise DegreeError(
                f"bundle 1-form of winding {self.n} has components of degrees "
                f"{self.x.degree()} and {self.y.degree()}"
            )

    def __add__(self, other: "BundleForm") -> "BundleForm":
        return BundleForm(self.n, self.x + other.x, self.y + other.y)

    def __sub__(self, other: "BundleForm") -> "BundleForm":
        return BundleForm(self.n, self.x - other.x, self.y - other.y)

    def scale(self, factor) -> "BundleForm":
        return BundleForm(self.n, self.x.scale(factor), self.y.scale(factor))

    def is_zero(self) -> bool:
        return self.x.is_zero() and self.y.is_zero()


def _displacement(lam: BaseForm) -> BaseForm:
    if lam.grade != 1:
        raise DegreeError(f"displacement must be a 1-form, got grade {lam.grade}")
    return lam


def coupling_left(s: Section, lam: BaseForm) -> BundleForm:
    """K(T) = c_n·T·λ(ς)."""
    lam = _displacement(lam)
    c = get_canonical_connection().coupling(s.n)
    return BundleForm(s.n, s.value * lam.x, s.value * lam.y).scale(c)


def coupling_right(s: Section, lam: BaseForm) -> BundleForm:
    """K̂(T) = c_n·λ(ς)*·T, the η's moved past T."""
    star = form_star(_displacement(lam))
    c = get_canonical_connection().coupling(s.n)
    return BundleForm(
        s.n, star.x * twist("minus", s.value), star.y * twist("plus", s.value)
    ).scale(c)


def nabla_left(s: Section, lam: Optional[BaseForm] = None) -> BundleForm:
    """∇_L T = q^n(∂₋T, ∂₊T), plus q^n·K(T) for a displaced connection."""
    x, y = horizontal_derivative(s.value)
    form = BundleForm(s.n, x, y)
    if lam is not None:
        form = form + coupling_left(s, lam)
    return form.scale(ScalarQ.q_power(s.n))


def nabla_right(s: Section, lam: Optional[BaseForm] = None) -> BundleForm:
    """∇_R T = (∂₋T, ∂₊T), plus K̂(T) for a displaced connection."""
    x, y = horizontal_derivative(s.value)
    form = BundleForm(s.n, x, y)
    if lam is not None:
        form = form + coupling_right(s, lam)
    return form


def nabla(side: str, s: Section, lam: Optional[BaseForm] = None) -> BundleForm:
    if check_side(side) == "left":
        return nabla_left(s, lam)
    return nabla_right(s, lam)


def section_inner(side: str, s_hat: AlgebraElement, s: AlgebraElement) -> ScalarQ:
    """h(ŝs*) on the left, h(s*ŝ) on the right."""
    if check_side(side) == "left":
        return haar(s_hat * s.star())
    return haar(s.star() * s_hat)


def form_inner(side: str, phi_hat: BundleForm, phi: BundleForm) -> ScalarQ:
    """½h(q²x̂x* + ŷy*) on the left, ½h(q²x*x̂ + y*ŷ) on the right."""
    if check_side(side) == "left":
        value = (phi_hat.x * phi.x.star()).scale(Q2) + phi_hat.y * phi.y.star()
    else:
        value = (phi.x.star() * phi_hat.x).scale(Q2) + phi.y.star() * phi_hat.y
    return haar(value) * HALF
