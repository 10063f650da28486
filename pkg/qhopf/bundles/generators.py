"""Generator columns of the associated bundles.

For winding n the first column of the corepresentation is a list of
degree-n monomials with squared coefficients (q-binomials), so the square
roots the matrix entries carry never have to be evaluated.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Tuple

from ..coefficients import ScalarQ, q_binomial
from ..errors import ConventionError
from ..quantum_group import AlgebraElement, Monomial, ONE_ELEMENT

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorSet:
    """The column (T^n_1, ..., T^n_{|n|+1}) and its diagonal Z^n.

    Attributes:
        n: the winding.
        squared_coeffs: squares of the coefficients of the column entries.
        monomials: the monomial of each column entry.
        Z: the diagonal of Z^n.
    """

    n: int
    squared_coeffs: Tuple[ScalarQ, ...]
    monomials: Tuple[Monomial, ...]
    Z: Tuple[ScalarQ, ...]

    def __len__(self) -> int:
        return len(self.monomials)

    def elements(self) -> Tuple[AlgebraElement, ...]:
        return tuple(AlgebraElement.from_monomial(m) for m in self.monomials)


def generator_set(n: int) -> GeneratorSet:
    """Builds the generator column for winding n.

    For n ≥ 0 the entries are α^{n−k}γ^k with squared coefficient
    binom(n, k)_{q⁻²} and Z = q^{2k}; for n < 0 they are α*^{i−1}γ*^{|n|+1−i}
    with squared coefficient binom(|n|, i−1)_{q²}·q^{2(|n|+1−i)} and
    Z = q^{−2(|n|+1−i)}.
    """
    if n >= 0:
        base = ScalarQ.q_power(-2)
        monomials = tuple(Monomial(n - k, k, 0) for k in range(n + 1))
        coeffs = tuple(q_binomial(n, k, base) for k in range(n + 1))
        zs = tuple(ScalarQ.q_power(2 * k) for k in range(n + 1))
    else:
        size = -n
        base = ScalarQ.q_power(2)
        monomials = tuple(Monomial(-(i - 1), 0, size + 1 - i) for i in range(1, size + 2))
        coeffs = tuple(
            q_binomial(size, i - 1, base) * ScalarQ.q_power(2 * (size + 1 - i))
            for i in range(1, size + 2)
        )
        zs = tuple(ScalarQ.q_power(-2 * (size + 1 - i)) for i in range(1, size + 2))
    return GeneratorSet(n=n, squared_coeffs=coeffs, monomials=monomials, Z=zs)


@dataclass(frozen=True)
class GeneratorReport:
    n: int
    column_identity: AlgebraElement
    weighted_identity: AlgebraElement

    @property
    def ok(self) -> bool:
        return self.column_identity.is_zero() and self.weighted_identity.is_zero()

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "column_residual": self.column_identity.to_text(),
            "weighted_residual": self.weighted_identity.to_text(),
            "ok": self.ok,
        }


def verify_generators(g: GeneratorSet, strict: bool = False) -> GeneratorReport:
    """Residuals of Σ c_i m_i*m_i = 𝟙 and Σ Z_i c_i m_i m_i* = 𝟙.

    Raises:
        ConventionError: if ``strict`` and a residual is nonzero.
    """
    column = AlgebraElement()
    weighted = AlgebraElement()
    for c, z, m in zip(g.squared_coeffs, g.Z, g.elements()):
        column = column + (m.star() * m).scale(c)
        weighted = weighted + (m * m.star()).scale(c * z)
    report = GeneratorReport(
        n=g.n, column_identity=column - ONE_ELEMENT, weighted_identity=weighted - ONE_ELEMENT
    )
    if strict and not report.ok:
        raise ConventionError(f"generator identities fail for n = {g.n}: {report.to_dict()}")
    logger.debug(f"generator identities for n = {g.n}: ok = {report.ok}")
    return report
