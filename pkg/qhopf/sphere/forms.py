"""Graded forms on the quantum sphere: f, xη₋ + yη₊ and p·dvol."""

from dataclasses import dataclass

from ..coefficients import ScalarQ
from ..errors import DegreeError
from ..quantum_group import AlgebraElement

GRADES = (0, 1, 2)

# S²_q coefficient degrees per grade and slot
_SLOT_DEGREES = {0: {"f0": 0}, 1: {"x": 2, "y": -2}, 2: {"p": 0}}


@dataclass(frozen=True)
class BaseForm:
    """An element of Ω^grade(S²_q).

    Attributes:
        grade: 0, 1 or 2.
        f0: the function of a 0-form (degree 0).
        x: coefficient of η₋ of a 1-form (degree 2).
        y: coefficient of η₊ of a 1-form (degree −2).
        p: coefficient of dvol = η₋η₊ of a 2-form (degree 0).
    """

    grade: int
    f0: AlgebraElement = AlgebraElement()
    x: AlgebraElement = AlgebraElement()
    y: AlgebraElement = AlgebraElement()
    p: AlgebraElement = AlgebraElement()

    def __post_init__(self):
        if self.grade not in GRADES:
            raise DegreeError(f"Ω^{self.grade}(S²_q) = 0; grades are 0, 1, 2")
        for slot in ("f0", "x", "y", "p"):
            value = getattr(self, slot)
            expected = _SLOT_DEGREES[self.grade].get(slot)
            if expected is None:
                if not value.is_zero():
                    raise DegreeError(f"grade-{self.grade} form has a nonzero {slot}")
            elif not value.is_homogeneous(expected):
                raise DegreeError(
                    f"{slot} of a grade-{self.grade} form must have degree "
                    f"{expected}, got {value.degree()}"
                )

    @classmethod
    def zero_form(cls, f0: AlgebraElement) -> "BaseForm":
        return cls(0, f0=f0)

    @classmethod
    def one_form(cls, x: AlgebraElement, y: AlgebraElement) -> "BaseForm":
        return cls(1, x=x, y=y)

    @classmethod
    def two_form(cls, p: AlgebraElement) -> "BaseForm":
        return cls(2, p=p)

    @classmethod
    def zero(cls, grade: int) -> "BaseForm":
        return cls(grade)

    def _combine(self, other: "BaseForm", sign: int) -> "BaseForm":
        if self.grade != other.grade:
            raise DegreeError(f"cannot add forms of grades {self.grade} and {other.grade}")
        return BaseForm(
            self.grade,
            f0=self.f0 + other.f0.scale(sign),
            x=self.x + other.x.scale(sign),
            y=self.y + other.y.scale(sign),
            p=self.p + other.p.scale(sign),
        )

    def __add__(self, other: "BaseForm") -> "BaseForm":
        return self._combine(other, 1)

    def __sub__(self, other: "BaseForm") -> "BaseForm":
        return self._combine(other, -1)

    def scale(self, factor: ScalarQ) -> "BaseForm":
        return BaseForm(
            self.grade,
            f0=self.f0.scale(factor),
            x=self.x.scale(factor),
            y=self.y.scale(factor),
            p=self.p.scale(factor),
        )

    def left_multiply(self, a: AlgebraElement) -> "BaseForm":
        """a·φ for a degree-0 element a."""
        return BaseForm(self.grade, f0=a * self.f0, x=a * self.x, y=a * self.y, p=a * self.p)

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in (self.f0, self.x, self.y, self.p))

    def to_text(self) -> str:
        if self.grade == 0:
            return self.f0.to_text()
        if self.grade == 1:
            return f"[{self.x.to_text()}]*eta_minus + [{self.y.to_text()}]*eta_plus"
        return f"[{self.p.to_text()}]*dvol"
