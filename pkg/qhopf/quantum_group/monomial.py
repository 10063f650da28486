"""PBW monomials of SU_q(2) and their closed-form products."""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import List, Tuple

from ..coefficients import ONE, ScalarQ

Term = Tuple["Monomial", ScalarQ]


class Generator(Enum):
    ALPHA = "alpha"
    ALPHA_STAR = "alpha*"
    GAMMA = "gamma"
    GAMMA_STAR = "gamma*"

    @property
    def degree(self) -> int:
        if self in (Generator.ALPHA, Generator.GAMMA):
            return 1
        return -1

    def star(self) -> "Generator":
        return _STARRED[self]


_STARRED = {
    Generator.ALPHA: Generator.ALPHA_STAR,
    Generator.ALPHA_STAR: Generator.ALPHA,
    Generator.GAMMA: Generator.GAMMA_STAR,
    Generator.GAMMA_STAR: Generator.GAMMA,
}


@dataclass(frozen=True, order=True)
class Monomial:
    """A PBW basis monomial α^m γ^k γ*^l (m ≥ 0) or α*^{−m} γ^k γ*^l (m < 0).

    Attributes:
        a_power: signed power of α (negative values stand for powers of α*).
        k: power of γ.
        l: power of γ*.
    """

    a_power: int = 0
    k: int = 0
    l: int = 0

    def __post_init__(self):
        assert self.k >= 0 and self.l >= 0, f"negative γ power in {self}"

    @property
    def degree(self) -> int:
        """U(1) degree, the weight of the coaction."""
        return self.a_power + self.k - self.l

    @property
    def left_degree(self) -> int:
        """Weight of the left U(1) action; with ``degree`` it labels chains."""
        return self.a_power - self.k + self.l

    @property
    def length(self) -> int:
        return abs(self.a_power) + self.k + self.l

    def is_identity(self) -> bool:
        return self.a_power == 0 and self.k == 0 and self.l == 0

    def word(self) -> Tuple[Generator, ...]:
        a = Generator.ALPHA if self.a_power > 0 else Generator.ALPHA_STAR
        return (
            (a,) * abs(self.a_power)
            + (Generator.GAMMA,) * self.k
            + (Generator.GAMMA_STAR,) * self.l
        )

    def split_last(self) -> Tuple["Monomial", Generator]:
        """Returns (M', g) with M'·g = M exactly; M must not be the identity."""
        if self.l > 0:
            return Monomial(self.a_power, self.k, self.l - 1), Generator.GAMMA_STAR
        if self.k > 0:
            return Monomial(self.a_power, self.k - 1, 0), Generator.GAMMA
        if self.a_power > 0:
            return Monomial(self.a_power - 1), Generator.ALPHA
        if self.a_power < 0:
            return Monomial(self.a_power + 1), Generator.ALPHA_STAR
        raise ValueError("the identity monomial has no last generator")

    def to_text(self) -> str:
        parts = []
        if self.a_power > 0:
            parts.append(f"alpha^{self.a_power}")
        elif self.a_power < 0:
            parts.append(f"alpha*^{-self.a_power}")
        if self.k:
            parts.append(f"gamma^{self.k}")
        if self.l:
            parts.append(f"gamma*^{self.l}")
        return " ".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.to_text()


IDENTITY = Monomial()

GENERATOR_MONOMIALS = {
    Generator.ALPHA: Monomial(1, 0, 0),
    Generator.ALPHA_STAR: Monomial(-1, 0, 0),
    Generator.GAMMA: Monomial(0, 1, 0),
    Generator.GAMMA_STAR: Monomial(0, 0, 1),
}


def _x_polynomial(a: int, b: int, alpha_first: bool) -> List[ScalarQ]:
    """Coefficients in x = γγ* of the scalar part of α^aα*^b or α*^aα^b.

    α^aα*^b = Π_{i<c}(1 − q^{2(a−i)}x)·α^{a−c}α*^{b−c} and
    α*^aα^b = Π_{i<c}(1 − q^{−2(a−1−i)}x)·α*^{a−c}α^{b−c}, c = min(a, b).
    """
    coeffs = [ONE]
    for i in range(min(a, b)):
        root = ScalarQ.q_power(2 * (a - i) if alpha_first else -2 * (a - 1 - i))
        shifted = [ScalarQ(0)] + [-root * c for c in coeffs]
        coeffs = [c + s for c, s in zip(coeffs + [ScalarQ(0)], shifted)]
    return coeffs


@lru_cache(maxsize=None)
def mul_monomials(left: Monomial, right: Monomial) -> Tuple[Term, ...]:
    """Product of two PBW monomials, already in PBW form.

    Uses γ^kγ*^l α^b = q^{∓b(k+l)} α^b γ^kγ*^l (upper sign for α, lower for α*),
    the α/α* product formulas of ``_x_polynomial`` and x^j α^r = q^{−2rj} α^r x^j.
    """
    b = right.a_power
    twist = ScalarQ.q_power(-b * (left.k + left.l))
    a1, a2 = left.a_power, right.a_power
    if a1 >= 0 and a2 >= 0 or a1 <= 0 and a2 <= 0:
        x_coeffs = [ONE]
    elif a1 > 0:
        x_coeffs = _x_polynomial(a1, -a2, alpha_first=True)
    else:
        x_coeffs = _x_polynomial(-a1, a2, alpha_first=False)
    r = a1 + a2
    terms = []
    for j, coeff in enumerate(x_coeffs):
        if coeff.is_zero():
            continue
        value = twist * coeff * ScalarQ.q_power(-2 * r * j)
        terms.append(
            (Monomial(r, left.k + right.k + j, left.l + right.l + j), value)
        )
    return tuple(terms)


@lru_cache(maxsize=None)
def star_monomial(m: Monomial) -> Term:
    """(α^aγ^kγ*^l)* as a single scaled monomial (q is real)."""
    b = abs(m.a_power)
    if m.a_power >= 0:
        factor = ScalarQ.q_power(b * (m.k + m.l))
    else:
        factor = ScalarQ.q_power(-b * (m.k + m.l))
    return Monomial(-m.a_power, m.l, m.k), factor


def monomials_of_degree(n: int, bound: int) -> List[Monomial]:
    """Degree-n monomials α^{n−k+l}γ^kγ*^l with k + l ≤ bound, sorted."""
    out = []
    for k in range(bound + 1):
        for l in range(bound + 1 - k):
            out.append(Monomial(n - k + l, k, l))
    return sorted(out)


def monomials_up_to_length(length: int) -> List[Monomial]:
    """All PBW monomials with |a_power| + k + l ≤ length, sorted."""
    out = []
    for k in range(length + 1):
        for l in range(length + 1 - k):
            rest = length - k - l
            for a in range(-rest, rest + 1):
                out.append(Monomial(a, k, l))
    return sorted(out)
