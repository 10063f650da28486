"""Structural checks on the bundle Laplacians.

These compute residuals and reports; none of them raise on a failed check,
so the verification suite can record the outcome either way.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

import numpy as np

from ..calculus import commutator_scalar
from ..coefficients import ScalarQ
from ..linalg import rank
from ..quantum_group import (
    ALPHA,
    ALPHA_STAR,
    GAMMA,
    GAMMA_STAR,
    AlgebraElement,
)
from ..sphere import BaseForm, laplacian0
from .spectral import DEFAULT_BUFFER, LaplacianOperator, laplacian_matrix, spectrum
from .tables import ROWS, row5_growth_decomposition

logger = logging.getLogger(__name__)


def witness(n: int) -> AlgebraElement:
    """α^nγγ* for n > 0, α*^{|n|}γγ* for n < 0 and αγγ*² for n = 0."""
    if n > 0:
        return (ALPHA ** n) * GAMMA * GAMMA_STAR
    if n < 0:
        return (ALPHA_STAR ** (-n)) * GAMMA * GAMMA_STAR
    return ALPHA * GAMMA * GAMMA_STAR * GAMMA_STAR


@dataclass(frozen=True)
class CommutationReport:
    n: int
    witness: AlgebraElement
    residual: AlgebraElement

    @property
    def commutes(self) -> bool:
        return self.residual.is_zero()

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "witness": self.witness.to_text(),
            "residual": self.residual.to_text(),
            "commutes": self.commutes,
        }


def commutation_witness(n: int, buffer: int = DEFAULT_BUFFER) -> CommutationReport:
    """[Δ_L, Δ_R] applied to the witness of winding n."""
    left = LaplacianOperator("left", buffer)
    right = LaplacianOperator("right", buffer)
    t = witness(n)
    residual = left(right(t)) - right(left(t))
    if residual.is_zero():
        logger.info(f"Δ_L and Δ_R commute on the n = {n} witness {t.to_text()}")
    return CommutationReport(n=n, witness=t, residual=residual)


def affine_relation_residual(a: AlgebraElement, buffer: int = DEFAULT_BUFFER) -> AlgebraElement:
    """Δ_R a − q^{−2n}Δ_L a − ½μ_n(q − q⁻¹)a, summed over the degrees of a."""
    left = LaplacianOperator("left", buffer)
    right = LaplacianOperator("right", buffer)
    shift = (ScalarQ.q_power(1) - ScalarQ.q_power(-1)) / 2
    total = AlgebraElement()
    for n, part in a.homogeneous_components().items():
        total = total + (
            right(part)
            - left(part).scale(ScalarQ.q_power(-2 * n))
            - part.scale(commutator_scalar(n) * shift)
        )
    return total


def star_symmetry_residual(a: AlgebraElement, buffer: int = DEFAULT_BUFFER) -> AlgebraElement:
    """Δ_L(a) − (Δ_R(a*))*."""
    left = LaplacianOperator("left", buffer)
    right = LaplacianOperator("right", buffer)
    return left(a) - right(a.star()).star()


def sphere_laplacian_residual(f: AlgebraElement, buffer: int = DEFAULT_BUFFER) -> AlgebraElement:
    """Δ_L f − laplacian0(f) for a degree-0 element f."""
    left = LaplacianOperator("left", buffer)
    return left(f) - laplacian0(BaseForm.zero_form(f)).f0


@dataclass
class GrowthReport:
    """Row-5 eigenvalues of α^mγ*^l (m − l = n) at one numeric q."""

    n: int
    q: float
    m_values: List[int] = field(default_factory=list)
    values: List[float] = field(default_factory=list)
    decomposition_ok: bool = True

    @property
    def increasing(self) -> bool:
        return bool(np.all(np.diff(np.array(self.values)) > 0))

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "q": self.q,
            "m": self.m_values,
            "values": self.values,
            "increasing": self.increasing,
            "decomposition_ok": self.decomposition_ok,
        }


def growth_scan(n: int, m_max: int, q: float = 0.5, side: str = "left") -> GrowthReport:
    """Evaluates the α^mγ*^l family of winding n for m up to ``m_max``.

    Raises:
        ValueError: if m_max < 2.
    """
    if m_max < 2:
        raise ValueError(f"m_max must be at least 2, got {m_max}")
    _, formula = ROWS[side][5]
    report = GrowthReport(n=n, q=q)
    for m in range(max(1, n + 1), m_max + 1):
        l = m - n
        value = formula(m, 0, l, n)
        if side == "left" and value != row5_growth_decomposition(m, l):
            report.decomposition_ok = False
        report.m_values.append(m)
        report.values.append(float(value.evaluate(Fraction(q).limit_denominator())))
    logger.debug(f"growth scan n={n}, q={q}: {report.values}")
    return report


@dataclass(frozen=True)
class CompletenessReport:
    n: int
    N: int
    block_size: int
    rank: int

    @property
    def complete(self) -> bool:
        return self.rank == self.block_size


def basis_completeness(n: int, N: int, side: str = "left") -> CompletenessReport:
    """Rank of the chain-triangular eigenvector families against the block.

    Each basis monomial m contributes the chain combination with leading
    monomial m; the family spans the block exactly when the rank is full.
    """
    block = laplacian_matrix(n, N, side)
    columns = [dict(pair.eigenvector.items()) for pair in spectrum(block)]
    return CompletenessReport(n=n, N=N, block_size=len(block.basis), rank=rank(columns))

