from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, Mapping, Tuple, Union

from ..coefficients import ONE, ZERO, ScalarQ
from .monomial import (
    GENERATOR_MONOMIALS,
    IDENTITY,
    Generator,
    Monomial,
    mul_monomials,
    star_monomial,
)

Coefficient = Union[int, Fraction, ScalarQ]

MIXED = "mixed"
ZERO_DEGREE = "zero"


def _as_scalar(value: Coefficient) -> ScalarQ:
    return value if isinstance(value, ScalarQ) else ScalarQ(value)


class AlgebraElement:
    """A finite linear combination of PBW monomials with ScalarQ coefficients.

    Products are reduced to PBW form on the fly, so every element is always
    in canonical form and equality is equality of term maps.

    Args:
        terms: mapping from Monomial to coefficient; zeros are dropped.

    Examples:
        >>> alpha, alpha_star = ALPHA, ALPHA_STAR
        >>> (alpha_star * alpha).to_text()
        '(1)*1 + (-1)*gamma^1 gamma*^1'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Coefficient] = None):
        cleaned = {}
        for monomial, coeff in (terms or {}).items():
            coeff = _as_scalar(coeff)
            if not coeff.is_zero():
                cleaned[monomial] = coeff
        self._terms: Dict[Monomial, ScalarQ] = cleaned

    @classmethod
    def _raw(cls, terms: Dict[Monomial, ScalarQ]) -> "AlgebraElement":
        element = cls.__new__(cls)
        element._terms = {m: c for m, c in terms.items() if not c.is_zero()}
        return element

    @classmethod
    def from_monomial(
        cls, monomial: Monomial, coeff: Coefficient = 1
    ) -> "AlgebraElement":
        return cls({monomial: coeff})

    @classmethod
    def scalar(cls, value: Coefficient) -> "AlgebraElement":
        return cls({IDENTITY: value})

    @classmethod
    def generator(cls, g: Generator) -> "AlgebraElement":
        return cls({GENERATOR_MONOMIALS[g]: 1})

    # access

    def items(self) -> Iterator[Tuple[Monomial, ScalarQ]]:
        for monomial in sorted(self._terms):
            yield monomial, self._terms[monomial]

    def monomials(self):
        return sorted(self._terms)

    def coefficient(self, monomial: Monomial) -> ScalarQ:
        return self._terms.get(monomial, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    # linear structure

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out[m] + c if m in out else c
        return AlgebraElement._raw(out)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement._raw({m: -c for m, c in self._terms.items()})

    def scale(self, factor: Coefficient) -> "AlgebraElement":
        factor = _as_scalar(factor)
        if factor.is_zero():
            return AlgebraElement()
        return AlgebraElement._raw({m: c * factor for m, c in self._terms.items()})

    # multiplication

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, Fraction, ScalarQ)):
            return self.scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        out: Dict[Monomial, ScalarQ] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                c12 = c1 * c2
                for m, c in mul_monomials(m1, m2):
                    value = c12 * c
                    out[m] = out[m] + value if m in out else value
        return AlgebraElement._raw(out)

    def __rmul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, Fraction, ScalarQ)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "AlgebraElement":
        result = ONE_ELEMENT
        for _ in range(exponent):
            result = result * self
        return result

    # structure

    def star(self) -> "AlgebraElement":
        """The involution; coefficients are fixed since q is real."""
        out = {}
        for m, c in self._terms.items():
            starred, factor = star_monomial(m)
            out[starred] = c * factor
        return AlgebraElement._raw(out)

    def degree(self) -> Union[int, str]:
        """U(1) degree, or ``"mixed"`` for inhomogeneous and ``"zero"`` for 0."""
        degrees = {m.degree for m in self._terms}
        if not degrees:
            return ZERO_DEGREE
        if len(degrees) > 1:
            return MIXED
        return degrees.pop()

    def is_homogeneous(self, n: int) -> bool:
        return all(m.degree == n for m in self._terms)

    def homogeneous_components(self) -> Dict[int, "AlgebraElement"]:
        parts: Dict[int, Dict[Monomial, ScalarQ]] = {}
        for m, c in self._terms.items():
            parts.setdefault(m.degree, {})[m] = c
        return {n: AlgebraElement._raw(parts[n]) for n in sorted(parts)}

    def map_terms(
        self, fn: Callable[[Monomial], "AlgebraElement"]
    ) -> "AlgebraElement":
        """Extends ``fn`` from monomials to this element by linearity."""
        total = AlgebraElement()
        for m, c in self._terms.items():
            total = total + fn(m).scale(c)
        return total

    def apply_functional(self, fn: Callable[[Monomial], ScalarQ]) -> ScalarQ:
        total = ZERO
        for m, c in self._terms.items():
            value = fn(m)
            if not value.is_zero():
                total = total + c * value
        return total

    # comparison and text

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, ScalarQ)):
            other = AlgebraElement.scalar(other)
        if not isinstance(other, AlgebraElement):
            return False
        return (self - other).is_zero()

    def __hash__(self) -> int:
        return hash(tuple((m, c.to_text()) for m, c in self.items()))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c.to_text()})*{m.to_text()}" for m, c in self.items())

    def __repr__(self) -> str:
        return f"AlgebraElement({self.to_text()})"


def element_sum(elements: Iterable[AlgebraElement]) -> AlgebraElement:
    total = AlgebraElement()
    for element in elements:
        total = total + element
    return total


class TensorElement:
    """An element of SU_q(2) ⊗ SU_q(2) in the PBW ⊗ PBW basis."""

    __slots__ = ("_terms",)

    def __init__(
        self, terms: Mapping[Tuple[Monomial, Monomial], Coefficient] = None
    ):
        cleaned = {}
        for pair, coeff in (terms or {}).items():
            coeff = _as_scalar(coeff)
            if not coeff.is_zero():
                cleaned[pair] = coeff
        self._terms: Dict[Tuple[Monomial, Monomial], ScalarQ] = cleaned

    @classmethod
    def pure(cls, left: AlgebraElement, right: AlgebraElement) -> "TensorElement":
        out = {}
        for m1, c1 in left.items():
            for m2, c2 in right.items():
                out[(m1, m2)] = c1 * c2
        return cls(out)

    def items(self):
        for pair in sorted(self._terms):
            yield pair, self._terms[pair]

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = dict(self._terms)
        for pair, c in other._terms.items():
            out[pair] = out[pair] + c if pair in out else c
        return TensorElement(out)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + other.scale(-1)

    def scale(self, factor: Coefficient) -> "TensorElement":
        factor = _as_scalar(factor)
        return TensorElement({p: c * factor for p, c in self._terms.items()})

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        out: Dict[Tuple[Monomial, Monomial], ScalarQ] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                c12 = c1 * c2
                for ma, ca in mul_monomials(a1, a2):
                    for mb, cb in mul_monomials(b1, b2):
                        key = (ma, mb)
                        value = c12 * ca * cb
                        out[key] = out[key] + value if key in out else value
        return TensorElement(out)

    def apply_left(self, fn: Callable[[Monomial], ScalarQ]) -> AlgebraElement:
        """(f ⊗ id)(t) for a linear functional f given on monomials."""
        out: Dict[Monomial, ScalarQ] = {}
        for (m1, m2), c in self._terms.items():
            value = fn(m1)
            if not value.is_zero():
                out[m2] = out[m2] + c * value if m2 in out else c * value
        return AlgebraElement._raw(out)

    def apply_right(self, fn: Callable[[Monomial], ScalarQ]) -> AlgebraElement:
        """(id ⊗ f)(t) for a linear functional f given on monomials."""
        out: Dict[Monomial, ScalarQ] = {}
        for (m1, m2), c in self._terms.items():
            value = fn(m2)
            if not value.is_zero():
                out[m1] = out[m1] + c * value if m1 in out else c * value
        return AlgebraElement._raw(out)

    def map_legs(
        self,
        left: Callable[[Monomial], AlgebraElement],
        right: Callable[[Monomial], AlgebraElement],
    ) -> "TensorElement":
        total = TensorElement()
        for (m1, m2), c in self._terms.items():
            total = total + TensorElement.pure(left(m1), right(m2)).scale(c)
        return total

    def multiply_legs(self) -> AlgebraElement:
        """The multiplication map m(a ⊗ b) = ab."""
        total = AlgebraElement()
        for (m1, m2), c in self._terms.items():
            total = total + AlgebraElement({m: v * c for m, v in mul_monomials(m1, m2)})
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return False
        return (self - other).is_zero()

    def __hash__(self) -> int:
        return hash(tuple((p, c.to_text()) for p, c in self.items()))

    def __repr__(self) -> str:
        body = " + ".join(
            f"({c.to_text()})*[{a.to_text()} ⊗ {b.to_text()}]"
            for (a, b), c in self.items()
        )
        return f"TensorElement({body or '0'})"


ONE_ELEMENT = AlgebraElement.scalar(ONE)
ALPHA = AlgebraElement.generator(Generator.ALPHA)
ALPHA_STAR = AlgebraElement.generator(Generator.ALPHA_STAR)
GAMMA = AlgebraElement.generator(Generator.GAMMA)
GAMMA_STAR = AlgebraElement.generator(Generator.GAMMA_STAR)
