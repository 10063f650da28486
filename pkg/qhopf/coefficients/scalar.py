"""Exact rational functions of the deformation parameter q.

``ScalarQ`` wraps an element of the sympy field QQ(q). Arithmetic is carried
out by sympy (cancellation included); this module adds the canonical text
form, hashing, parsing and evaluation that the rest of the package relies on.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Tuple, Union

from sympy import QQ, Symbol, SympifyError, sympify
from sympy.polys.fields import field

from ..errors import PoleError, QHopfParseError
from .laurent import LaurentPoly, Number

Q_FIELD, Q_GENERATOR = field("q", QQ)
Q_SYMBOL = Symbol("q")


def _poly_terms(poly) -> dict:
    terms = {}
    for (exponent,), coeff in poly.terms():
        terms[exponent] = Fraction(int(coeff.numerator), int(coeff.denominator))
    return terms


class ScalarQ:
    """An exact element of QQ(q).

    Values are immutable and hashable. The canonical form is
    numerator/denominator with the common q-power pulled into the numerator,
    the denominator having minimal exponent 0 and leading coefficient 1.

    Args:
        value: an int, a Fraction, another ScalarQ or a sympy field element.

    Examples:
        >>> two = ScalarQ.q_power(2)
        >>> ((ScalarQ(1) - two * two) / (ScalarQ(1) - two)).to_text()
        '1 + 1*q^2'
    """

    __slots__ = ("_value", "_parts", "_text")

    def __init__(self, value: Union[int, Fraction, "ScalarQ", object] = 0):
        if isinstance(value, ScalarQ):
            value = value._value
        elif isinstance(value, (int, Fraction)):
            value = Fraction(value)
            value = Q_FIELD(QQ(value.numerator, value.denominator))
        elif getattr(value, "field", None) is not Q_FIELD:
            raise TypeError(f"cannot build ScalarQ from {type(value).__name__}")
        self._value = value
        self._parts = None
        self._text = None

    # constructors

    @classmethod
    def q_power(cls, exponent: int) -> "ScalarQ":
        return _q_power(exponent)

    @classmethod
    def from_laurent(cls, poly: LaurentPoly) -> "ScalarQ":
        total = Q_FIELD(0)
        for exponent, coeff in poly.items():
            total += Q_GENERATOR**exponent * QQ(coeff.numerator, coeff.denominator)
        return cls(total)

    @classmethod
    def parse(cls, text: str) -> "ScalarQ":
        """Parses canonical text (or any rational expression in ``q``).

        Raises:
            QHopfParseError: if ``text`` is not a rational function of q.
        """
        try:
            expr = sympify(text, locals={"q": Q_SYMBOL}, convert_xor=True)
            return cls(Q_FIELD.from_expr(expr))
        except (SympifyError, ValueError, TypeError, SyntaxError) as e:
            raise QHopfParseError(f"not a rational function of q: {text!r} ({e})")

    # arithmetic

    @staticmethod
    def _coerce(other) -> "ScalarQ":
        if isinstance(other, ScalarQ):
            return other
        if isinstance(other, (int, Fraction)):
            return ScalarQ(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ScalarQ(self._value + other._value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ScalarQ(self._value - other._value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ScalarQ(other._value - self._value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ScalarQ(self._value * other._value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError(f"division of {self.to_text()} by zero")
        return ScalarQ(self._value / other._value)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return ScalarQ(-self._value)

    def __pow__(self, exponent: int):
        if exponent < 0 and self.is_zero():
            raise ZeroDivisionError("negative power of zero")
        return ScalarQ(self._value**exponent)

    def inverse(self) -> "ScalarQ":
        return ScalarQ(1) / self

    # comparison

    def is_zero(self) -> bool:
        return not self._value.numer

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return (self - other).is_zero()

    def __hash__(self) -> int:
        return hash(self.to_text())

    # canonical form

    def parts(self) -> Tuple[LaurentPoly, LaurentPoly]:
        """Returns the canonical (numerator, denominator) Laurent pair."""
        if self._parts is None:
            numer = _poly_terms(self._value.numer)
            denom = _poly_terms(self._value.denom)
            if not numer:
                self._parts = (LaurentPoly(), LaurentPoly({0: 1}))
            else:
                shift = min(numer) - min(denom)
                numer_poly = LaurentPoly(numer).shift(-min(numer))
                denom_poly = LaurentPoly(denom).shift(-min(denom))
                lead = denom_poly.leading_coefficient()
                self._parts = (
                    numer_poly.scale(1 / lead).shift(shift),
                    denom_poly.scale(1 / lead),
                )
        return self._parts

    @property
    def numerator(self) -> LaurentPoly:
        return self.parts()[0]

    @property
    def denominator(self) -> LaurentPoly:
        return self.parts()[1]

    def is_laurent(self) -> bool:
        return self.denominator == LaurentPoly({0: 1})

    def to_text(self) -> str:
        if self._text is None:
            numer, denom = self.parts()
            if self.is_laurent():
                self._text = numer.to_text()
            else:
                self._text = f"({numer.to_text()})/({denom.to_text()})"
        return self._text

    def to_field(self):
        """The underlying sympy ``FracElement``."""
        return self._value

    def to_sympy(self):
        return self._value.as_expr()

    def evaluate(self, q0: Number) -> Number:
        """Value at ``q0``: a Fraction for rational input, a float otherwise.

        Raises:
            PoleError: if ``q0`` is a pole.
        """
        numer, denom = self.parts()
        bottom = denom.evaluate(q0)
        if bottom == 0:
            raise PoleError(f"{self.to_text()} has a pole at q = {q0}")
        return numer.evaluate(q0) / bottom

    def __repr__(self) -> str:
        return f"ScalarQ({self.to_text()})"

    def __str__(self) -> str:
        return self.to_text()

    def __reduce__(self):
        return (ScalarQ.parse, (self.to_text(),))


@lru_cache(maxsize=None)
def _q_power(exponent: int) -> ScalarQ:
    return ScalarQ(Q_GENERATOR**exponent)


ZERO = ScalarQ(0)
ONE = ScalarQ(1)
Q = ScalarQ.q_power(1)


def scalar_arith(a: ScalarQ, b: ScalarQ, op: str) -> ScalarQ:
    """Applies ``op`` in {"add", "sub", "mul", "div"} to ``a`` and ``b``."""
    if op == "add":
        return a + b
    elif op == "sub":
        return a - b
    elif op == "mul":
        return a * b
    elif op == "div":
        return a / b
    else:
        raise ValueError(f"Unknown scalar operation: {op}")
