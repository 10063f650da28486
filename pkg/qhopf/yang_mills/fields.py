"""Connection displacements and Yang–Mills–scalar-matter field triples."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ..bundles import Section
from ..coefficients import ScalarQ, q_int
from ..errors import DegreeError
from ..quantum_group import ALPHA, ALPHA_STAR, GAMMA, GAMMA_STAR, AlgebraElement
from ..sphere import BaseForm, base_d, form_star

HALF = ScalarQ(Fraction(1, 2))

# T₁ and T₂ of the explicit solutions, by family
SOLUTION_FAMILIES = {
    "alpha": (ALPHA, ALPHA_STAR),
    "gamma": (GAMMA, GAMMA_STAR),
}


@dataclass(frozen=True)
class Displacement:
    """λ with ω = ω^c + λ, stored as the 1-form λ(ς)."""

    lam_of_sigma: BaseForm = field(default_factory=lambda: BaseForm.zero(1))

    def __post_init__(self):
        if self.lam_of_sigma.grade != 1:
            raise DegreeError(
                f"λ(ς) must be a 1-form, got grade {self.lam_of_sigma.grade}"
            )

    @classmethod
    def exact(cls, p: AlgebraElement) -> "Displacement":
        """λ(ς) = dp for a degree-0 element p."""
        return cls(base_d(BaseForm.zero_form(p)))

    def is_zero(self) -> bool:
        return self.lam_of_sigma.is_zero()

    def star(self) -> "Displacement":
        return Displacement(form_star(self.lam_of_sigma))


CANONICAL = Displacement()


def matter_potential(n: int) -> ScalarQ:
    """V′ = ½q⁴[n], the eigenvalue of the winding-n solutions."""
    return HALF * ScalarQ.q_power(4) * q_int(n)


def recovered_winding(n: int, q: float = 0.999) -> float:
    """2V′ at a numeric q close to 1; tends to n as q → 1."""
    return 2 * float(matter_potential(n).evaluate(Fraction(q).limit_denominator()))


@dataclass(frozen=True)
class YMSMTriple:
    """(ω, T₁, T₂) with deg T₁ = n, deg T₂ = −n and the constant V′."""

    omega: Displacement
    T1: Section
    T2: Section
    Vprime: ScalarQ

    def __post_init__(self):
        if self.T2.n != -self.T1.n:
            raise DegreeError(
                f"T₂ must have winding {-self.T1.n}, got {self.T2.n}"
            )

    @property
    def n(self) -> int:
        return self.T1.n

    @classmethod
    def solution(
        cls,
        n: int,
        family: str = "alpha",
        omega: Optional[Displacement] = None,
        Vprime: Optional[ScalarQ] = None,
    ) -> "YMSMTriple":
        """T₁ = α^n, T₂ = α*^n (or γ^n, γ*^n) with V′ = ½q⁴[n]."""
        if family not in SOLUTION_FAMILIES:
            raise ValueError(
                f"family must be one of {sorted(SOLUTION_FAMILIES)}, got {family!r}"
            )
        if n < 0:
            raise ValueError(f"solution triples are indexed by n >= 0, got {n}")
        first, second = SOLUTION_FAMILIES[family]
        return cls(
            omega=omega or CANONICAL,
            T1=Section(n, first ** n),
            T2=Section(-n, second ** n),
            Vprime=matter_potential(n) if Vprime is None else Vprime,
        )
