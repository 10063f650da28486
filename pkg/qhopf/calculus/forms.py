"""Left-invariant and total 1-forms of the 3D calculus on SU_q(2)."""

from dataclasses import dataclass
from typing import Callable, Dict, Tuple

from ..coefficients import ONE, ZERO, ScalarQ
from ..quantum_group import AlgebraElement, ONE_ELEMENT

BASIS_NAMES: Tuple[str, str, str] = ("minus", "zero", "plus")


@dataclass(frozen=True)
class InvariantForm:
    """θ = c₋η₋ + c₀η₀ + c₊η₊ in the space of left-invariant 1-forms."""

    c_minus: ScalarQ = ZERO
    c_zero: ScalarQ = ZERO
    c_plus: ScalarQ = ZERO

    @classmethod
    def basis(cls, name: str) -> "InvariantForm":
        if name not in BASIS_NAMES:
            raise ValueError(f"Unknown invariant basis element: {name}")
        return cls(**{f"c_{name}": ONE})

    @classmethod
    def from_components(cls, values: Dict[str, ScalarQ]) -> "InvariantForm":
        return cls(*(values.get(name, ZERO) for name in BASIS_NAMES))

    def component(self, name: str) -> ScalarQ:
        return getattr(self, f"c_{name}")

    def components(self) -> Tuple[ScalarQ, ScalarQ, ScalarQ]:
        return (self.c_minus, self.c_zero, self.c_plus)

    def __add__(self, other: "InvariantForm") -> "InvariantForm":
        return InvariantForm(
            *(a + b for a, b in zip(self.components(), other.components()))
        )

    def __sub__(self, other: "InvariantForm") -> "InvariantForm":
        return self + other.scale(-1)

    def scale(self, factor) -> "InvariantForm":
        return InvariantForm(*(c * factor for c in self.components()))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components())

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        parts = [
            f"({c.to_text()})*eta_{name}"
            for name, c in zip(BASIS_NAMES, self.components())
            if not c.is_zero()
        ]
        return " + ".join(parts)


ZERO_FORM = InvariantForm()
ETA_MINUS = InvariantForm.basis("minus")
ETA_ZERO = InvariantForm.basis("zero")
ETA_PLUS = InvariantForm.basis("plus")


@dataclass(frozen=True)
class TotalForm1:
    """A 1-form a₋η₋ + a₀η₀ + a₊η₊ with coefficients written on the left.

    Right multiplication by an algebra element needs the commutation of the
    η's past it, which is supplied by the caller as ``eta_times`` (see
    ``qhopf.calculus.derivatives.eta_times``).
    """

    minus: AlgebraElement = AlgebraElement()
    zero: AlgebraElement = AlgebraElement()
    plus: AlgebraElement = AlgebraElement()

    @classmethod
    def from_invariant(cls, theta: InvariantForm) -> "TotalForm1":
        return cls(*(ONE_ELEMENT.scale(c) for c in theta.components()))

    def coefficient(self, name: str) -> AlgebraElement:
        return getattr(self, name)

    def coefficients(self) -> Tuple[AlgebraElement, AlgebraElement, AlgebraElement]:
        return (self.minus, self.zero, self.plus)

    def __add__(self, other: "TotalForm1") -> "TotalForm1":
        return TotalForm1(
            *(a + b for a, b in zip(self.coefficients(), other.coefficients()))
        )

    def __sub__(self, other: "TotalForm1") -> "TotalForm1":
        return TotalForm1(
            *(a - b for a, b in zip(self.coefficients(), other.coefficients()))
        )

    def scale(self, factor) -> "TotalForm1":
        return TotalForm1(*(a.scale(factor) for a in self.coefficients()))

    def left_multiply(self, a: AlgebraElement) -> "TotalForm1":
        return TotalForm1(*(a * c for c in self.coefficients()))

    def right_multiply(
        self,
        b: AlgebraElement,
        eta_times: Callable[[str, AlgebraElement], "TotalForm1"],
    ) -> "TotalForm1":
        """φ·b, moving each η_i past b with ``eta_times(i, b)`` = η_i·b."""
        total = TotalForm1()
        for name, coeff in zip(BASIS_NAMES, self.coefficients()):
            if coeff.is_zero():
                continue
            total = total + eta_times(name, b).left_multiply(coeff)
        return total

    def horizontal(self) -> "TotalForm1":
        """Drops the vertical η₀ part."""
        return TotalForm1(self.minus, AlgebraElement(), self.plus)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coefficients())

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(
            f"[{c.to_text()}]*eta_{name}"
            for name, c in zip(BASIS_NAMES, self.coefficients())
            if not c.is_zero()
        )
