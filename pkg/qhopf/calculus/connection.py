"""The canonical connection ω^c, its curvature, and regular connections."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from ..coefficients import ONE, ScalarQ
from ..errors import ConventionError, DegreeError
from ..linalg import nullspace
from ..quantum_group import (
    ALPHA,
    AlgebraElement,
    Generator,
    Monomial,
    monomials_up_to_length,
)
from .circle import CircleCalculus, get_circle_calculus
from .derivatives import eta_times, partial_minus, partial_plus, partial_zero, twist
from .forms import ETA_ZERO, InvariantForm, TotalForm1

logger = logging.getLogger(__name__)

Q = ScalarQ.q_power(1)

# expected value of R^{ω^c}(ς) as a dvol coefficient
CURVATURE_COEFFICIENT = (ONE + ScalarQ.q_power(2)) * Q


@dataclass(frozen=True)
class CanonicalConnection:
    """ω^c(ς) = c₀·η₀, the purely vertical connection.

    Attributes:
        c_zero: the vertical scalar matching π′ with the η₀ part of d.
        circle: the structure-group calculus the connection is built on.
    """

    c_zero: ScalarQ
    circle: CircleCalculus

    def omega(self, sigma_coefficient: ScalarQ = ONE) -> TotalForm1:
        """ω^c(t·ς) = 𝟙⊗(t·c₀η₀)."""
        return TotalForm1.from_invariant(ETA_ZERO.scale(self.c_zero * sigma_coefficient))

    def omega_invariant(self, sigma_coefficient: ScalarQ = ONE) -> InvariantForm:
        return ETA_ZERO.scale(self.c_zero * sigma_coefficient)

    def coupling(self, n: int) -> ScalarQ:
        """c_n = c₀·g_n, the weight of ω^c(π′(z^n))."""
        return self.c_zero * self.circle.germ_power(n)

    def vertical_residual(self, a: AlgebraElement) -> AlgebraElement:
        """∂₀(a) − c_n·(η₀·a) coefficient for homogeneous a of degree n."""
        n = a.degree()
        if not isinstance(n, int):
            raise DegreeError(f"vertical check needs a homogeneous element, got {a.to_text()}")
        return partial_zero(a) - twist("zero", a).scale(self.coupling(n))

    def is_vertical_consistent(self, a: AlgebraElement) -> bool:
        return self.vertical_residual(a).is_zero()


def calibrate_connection(circle: CircleCalculus = None) -> CanonicalConnection:
    """Solves c₀ from ∂₀(α)η₀ = c₀·g₁·η₀·α and checks it on α.

    Raises:
        ConventionError: if the solved scalar does not reproduce ∂₀(α).
    """
    circle = circle or get_circle_calculus()
    probe = ALPHA
    monomial = probe.monomials()[0]
    lhs = partial_zero(probe).coefficient(monomial)
    rhs = twist("zero", probe).coefficient(monomial) * circle.germ_power(1)
    connection = CanonicalConnection(c_zero=lhs / rhs, circle=circle)
    if not connection.is_vertical_consistent(probe):
        raise ConventionError("canonical connection is not vertical-consistent on alpha")
    logger.debug(f"canonical connection scalar c0 = {connection.c_zero.to_text()}")
    return connection


@lru_cache(maxsize=None)
def get_canonical_connection() -> CanonicalConnection:
    return calibrate_connection()


def curvature_on_section(sample: AlgebraElement, kappa=None) -> ScalarQ:
    """R^{ω^c}(ς) read off D² on a homogeneous section T of degree n ≠ 0.

    The horizontal part of d² on T is κ₋∂₋∂₊T + κ₊∂₊∂₋T = −g_n·R(ς)·T, where
    g_n is the coefficient of ς in π′(z^n).

    Args:
        sample: a homogeneous element of nonzero degree.
        kappa: (κ₋, κ₊); defaults to the calibrated sphere constants.

    Raises:
        DegreeError: if ``sample`` is mixed or of degree 0.
        ConventionError: if D²T is not a multiple of T.
    """
    n = sample.degree()
    if not isinstance(n, int) or n == 0:
        raise DegreeError(f"curvature needs a section of nonzero degree, got {sample.to_text()}")
    if kappa is None:
        from ..sphere.conventions import get_conventions

        conv = get_conventions()
        kappa = (conv.kappa_minus, conv.kappa_plus)
    kappa_minus, kappa_plus = kappa
    square = partial_minus(partial_plus(sample)).scale(kappa_minus) + partial_plus(
        partial_minus(sample)
    ).scale(kappa_plus)
    g_n = get_circle_calculus().germ_power(n)
    monomial = sample.monomials()[0]
    value = -square.coefficient(monomial) / (sample.coefficient(monomial) * g_n)
    if not (square + sample.scale(value * g_n)).is_zero():
        raise ConventionError(f"D² is not scalar on {sample.to_text()}")
    return value


@lru_cache(maxsize=None)
def canonical_curvature() -> ScalarQ:
    """R^{ω^c}(ς) as a dvol coefficient, computed on the section α."""
    value = curvature_on_section(ALPHA)
    logger.debug(f"canonical curvature = {value.to_text()}")
    return value


def curvature(lam=None):
    """R^ω(ς) = R^{ω^c}(ς) + d(λ(ς)) for the displaced connection ω^c + λ.

    Args:
        lam: grade-1 ``BaseForm`` assigned to ς, or None for ω^c itself.

    Returns:
        The grade-2 ``BaseForm`` of the curvature.
    """
    from ..sphere import BaseForm, base_d

    canonical = BaseForm.two_form(AlgebraElement.scalar(canonical_curvature()))
    if lam is None:
        return canonical
    if lam.grade != 1:
        raise DegreeError(f"connection displacement must be a 1-form, got grade {lam.grade}")
    return canonical + base_d(lam)


# regular connections


def _displacement(x: AlgebraElement, y: AlgebraElement) -> TotalForm1:
    return TotalForm1(minus=x, plus=y)


def qpc_constraint_residual(
    x: AlgebraElement, y: AlgebraElement
) -> Dict[Generator, TotalForm1]:
    """λ(ς)g − g·λ(ς∘z^{deg g}) for each generator g."""
    circle = get_circle_calculus()
    lam = _displacement(x, y)
    out = {}
    for g in Generator:
        element = AlgebraElement.generator(g)
        factor = circle.circ_power(g.degree)
        out[g] = lam.right_multiply(element, eta_times) - lam.left_multiply(
            element
        ).scale(factor)
    return out


def regular_qpc_solver(max_total_degree: int) -> List[Tuple[AlgebraElement, AlgebraElement]]:
    """Regular displacements λ(ς) = xη₋ + yη₊ with words of length ≤ the bound.

    Returns:
        A basis of the solution space as (x, y) pairs; empty when ω^c is the
        only regular connection in the truncation.
    """
    if max_total_degree < 2:
        raise ValueError(f"max_total_degree must be >= 2, got {max_total_degree}")
    monomials = monomials_up_to_length(max_total_degree)
    unknowns: List[Tuple[str, Monomial]] = [("x", m) for m in monomials if m.degree == 2]
    unknowns += [("y", m) for m in monomials if m.degree == -2]

    columns = []
    for side, m in unknowns:
        e = AlgebraElement.from_monomial(m)
        x, y = (e, AlgebraElement()) if side == "x" else (AlgebraElement(), e)
        column = {}
        for g, residual in qpc_constraint_residual(x, y).items():
            for name, coeff in zip(("minus", "zero", "plus"), residual.coefficients()):
                for mono, c in coeff.items():
                    column[(g, name, mono)] = c
        columns.append(column)
    logger.info(
        f"regular connection system: {len(unknowns)} unknowns, "
        f"word length <= {max_total_degree}"
    )

    solutions = []
    for vector in nullspace(columns):
        x_terms, y_terms = {}, {}
        for (side, m), c in zip(unknowns, vector):
            (x_terms if side == "x" else y_terms)[m] = c
        solutions.append((AlgebraElement(x_terms), AlgebraElement(y_terms)))
    return solutions
