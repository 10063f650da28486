from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from ..errors import PoleError

Number = Union[int, Fraction, float]


class LaurentPoly:
    """Finite Laurent polynomial in q with rational coefficients.

    The term map never stores zero coefficients, so two equal polynomials
    always have identical term maps.

    Args:
        terms: mapping from integer exponent of q to coefficient.

    Examples:
        >>> LaurentPoly({0: 1, 2: Fraction(1, 2)}).to_text()
        '1 + 1/2*q^2'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Number] = None):
        cleaned = {}
        for exponent, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff != 0:
                cleaned[int(exponent)] = coeff
        self._terms: Dict[int, Fraction] = cleaned

    @classmethod
    def monomial(cls, exponent: int, coeff: Number = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        for exponent in sorted(self._terms):
            yield exponent, self._terms[exponent]

    def is_zero(self) -> bool:
        return not self._terms

    def min_exponent(self) -> int:
        return min(self._terms)

    def max_exponent(self) -> int:
        return max(self._terms)

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.max_exponent()]

    def shift(self, offset: int) -> "LaurentPoly":
        return LaurentPoly({e + offset: c for e, c in self._terms.items()})

    def scale(self, factor: Number) -> "LaurentPoly":
        factor = Fraction(factor)
        return LaurentPoly({e: c * factor for e, c in self._terms.items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: Dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def evaluate(self, q0: Number) -> Number:
        """Evaluates at ``q0``; exact for rationals, double precision for floats."""
        if isinstance(q0, float):
            return sum(float(c) * q0**e for e, c in self._terms.items())
        q0 = Fraction(q0)
        if q0 == 0 and self._terms and self.min_exponent() < 0:
            raise PoleError(f"{self.to_text()} has a pole at q = 0")
        return sum((c * q0**e for e, c in self._terms.items()), Fraction(0))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exponent, coeff in self.items():
            magnitude = abs(coeff)
            body = f"{magnitude}" if exponent == 0 else f"{magnitude}*q^{exponent}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if coeff > 0 else f" - {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()})"


def laurent_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    total = LaurentPoly()
    for poly in polys:
        total = total + poly
    return total
