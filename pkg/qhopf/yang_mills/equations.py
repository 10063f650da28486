"""Yang–Mills and scalar-matter field equations as residuals.

A displaced connection ω = ω^c + λ is Yang–Mills exactly when λ(ς) is
closed, and closed 1-forms on S²_q are exact; ``find_primitive`` recovers the
potential. The scalar-matter equations use the canonical connection and a
constant V′.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..bundles import (
    LaplacianOperator,
    coupling_left,
    coupling_right,
    form_inner,
    nabla_left,
    nabla_right,
)
from ..calculus import curvature
from ..coefficients import ONE, ScalarQ
from ..errors import DegreeError, FiltrationError
from ..linalg import solve
from ..quantum_group import AlgebraElement, Monomial, monomials_of_degree
from ..sphere import (
    BaseForm,
    base_d,
    codifferential_left,
    codifferential_right,
    form_star,
    global_inner,
)
from .fields import Displacement, YMSMTriple
from .probes import probe_family

logger = logging.getLogger(__name__)

HALF = ScalarQ(Fraction(1, 2))


def ym_residual(d: Displacement) -> Tuple[BaseForm, BaseForm]:
    """d^{⋆L}R^ω(ς) and d^{⋆R}(R^ω(ς)*); both vanish iff ω is Yang–Mills."""
    field_strength = curvature(d.lam_of_sigma)
    return (
        codifferential_left(field_strength),
        codifferential_right(form_star(field_strength)),
    )


def is_yang_mills(d: Displacement) -> bool:
    left, right = ym_residual(d)
    return left.is_zero() and right.is_zero()


def ym_variation(d: Displacement, dprime: Displacement) -> ScalarQ:
    """−½⟨dλ′(ς), dλ(ς)⟩, the derivative of the action at ω^c + λ along λ′."""
    return -HALF * global_inner(base_d(dprime.lam_of_sigma), base_d(d.lam_of_sigma))


def _form_column(phi: BaseForm) -> Dict[Tuple[str, Monomial], ScalarQ]:
    column = {("x", m): c for m, c in phi.x.items()}
    column.update({("y", m): c for m, c in phi.y.items()})
    return column


def find_primitive(closed: BaseForm, N: int) -> AlgebraElement:
    """A degree-0 p with dp = ``closed``, built from monomials with k + l ≤ N.

    The constant term is fixed to 0.

    Raises:
        DegreeError: if ``closed`` is not a 1-form.
        ValueError: if ``closed`` is not closed.
        FiltrationError: if no primitive exists within filtration N.
    """
    if closed.grade != 1:
        raise DegreeError(f"primitives are sought for 1-forms, got grade {closed.grade}")
    if not base_d(closed).is_zero():
        raise ValueError(f"{closed.to_text()} is not closed")
    if closed.is_zero():
        return AlgebraElement()
    basis = [m for m in monomials_of_degree(0, N) if not m.is_identity()]
    columns = [
        _form_column(base_d(BaseForm.zero_form(AlgebraElement.from_monomial(m))))
        for m in basis
    ]
    coefficients = solve(columns, _form_column(closed)) if basis else None
    if coefficients is None:
        raise FiltrationError(
            f"no primitive within filtration {N}; increase filtration"
        )
    return AlgebraElement(
        {m: c for m, c in zip(basis, coefficients) if not c.is_zero()}
    )


def ymsm_matter_residual(t: YMSMTriple) -> Tuple[AlgebraElement, AlgebraElement]:
    """Δ_L T₁ − V′T₁ and Δ_R T₂ − V′T₂."""
    left = LaplacianOperator("left")(t.T1.value) - t.T1.value.scale(t.Vprime)
    right = LaplacianOperator("right")(t.T2.value) - t.T2.value.scale(t.Vprime)
    return left, right


def gauge_terms(t: YMSMTriple, probe: Displacement) -> Tuple[ScalarQ, ScalarQ]:
    """⟨K(T₁), ∇_L T₁⟩_L and ⟨K̂(T₂), ∇_R T₂⟩_R for one probe λ."""
    lam = probe.lam_of_sigma
    left = form_inner("left", coupling_left(t.T1, lam), nabla_left(t.T1))
    right = form_inner("right", coupling_right(t.T2, lam), nabla_right(t.T2))
    return left, right


def gauge_constant_law(n: int) -> ScalarQ:
    """The relative constant between the two gauge terms at winding n.

    Both solution families share it: for T₁ = α^n or γ^n the two terms are
    multiples of one Haar value, with ratio −(c_n/c_{−n})q^{1−n}.
    """
    return ScalarQ.q_power(1 - 3 * n)


def calibrate_gauge_constant(
    t: YMSMTriple, probes: Optional[Sequence[Displacement]] = None
) -> ScalarQ:
    """Ratio of the two gauge terms on the first probe with a nonzero right term.

    Returns 1 when every right term vanishes (n = 0).
    """
    for probe in probes if probes is not None else probe_family():
        left, right = gauge_terms(t, probe)
        if not right.is_zero():
            return left / right
    return ONE


def ymsm_gauge_residual(
    t: YMSMTriple, probe: Displacement, constant: Optional[ScalarQ] = None
) -> ScalarQ:
    """⟨K(T₁), ∇_L T₁⟩_L − ρ·⟨K̂(T₂), ∇_R T₂⟩_R.

    Args:
        t: the field triple.
        probe: the direction λ.
        constant: ρ; defaults to ``gauge_constant_law(t.n)``.
    """
    rho = gauge_constant_law(t.n) if constant is None else constant
    left, right = gauge_terms(t, probe)
    return left - rho * right


def gauge_scan(
    t: YMSMTriple,
    probes: Optional[Sequence[Displacement]] = None,
    constant: Optional[ScalarQ] = None,
) -> List[ScalarQ]:
    """Gauge residuals over a displacement family.

    ``constant`` defaults to the frozen ``gauge_constant_law(t.n)``; pass the
    output of ``calibrate_gauge_constant`` to rescale per winding instead.
    """
    probes = list(probes) if probes is not None else probe_family()
    residuals = [ymsm_gauge_residual(t, probe, constant) for probe in probes]
    nonzero = sum(1 for r in residuals if not r.is_zero())
    logger.debug(
        f"gauge scan n={t.n}: {nonzero} of {len(residuals)} probes leave a residual"
    )
    return residuals


def max_abs(values: Sequence[ScalarQ], q: float) -> float:
    """max |v(q)| over exact values evaluated at a numeric q."""
    q0 = Fraction(q).limit_denominator()
    return max((abs(float(v.evaluate(q0))) for v in values), default=0.0)
