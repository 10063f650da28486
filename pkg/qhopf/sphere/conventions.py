"""Calibration of the sphere constants and the convention report.

The grade-1 differential constants κ±, the codifferential scalars s₁, s₂ and
the wedge constants are not free choices: each is solved from one sample of
the identity it has to satisfy (d² = 0, adjointness of d, compatibility of
the metric with ⋆_L) and then rechecked on an independent sample.
"""

import logging
from dataclasses import asdict, dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from ..calculus import (
    CURVATURE_COEFFICIENT,
    curvature,
    get_canonical_connection,
    get_circle_calculus,
    get_germs_data,
    partial_minus,
    partial_plus,
)
from ..coefficients import ONE, ScalarQ
from ..errors import ConventionError
from ..quantum_group import (
    ALPHA,
    ALPHA_STAR,
    GAMMA,
    GAMMA_STAR,
    ONE_ELEMENT,
    AlgebraElement,
    Generator,
)
from .forms import BaseForm
from .geometry import (
    base_d,
    codifferential_left,
    global_inner,
    hodge_left,
    integral,
    laplacian0,
    wedge,
)

logger = logging.getLogger(__name__)

Q2 = ScalarQ.q_power(2)
LAPLACIAN_ANCHOR = ScalarQ(Fraction(1, 2)) * (ONE + Q2) * (ONE + Q2)

# (η₋* = a·η₊, η₊* = b·η₋) as (a, b)
ETA_STAR_CONVENTIONS: Dict[str, Tuple[ScalarQ, ScalarQ]] = {
    "plain": (-ONE, -ONE),
    "twisted": (-ScalarQ.q_power(-2), -Q2),
}


@dataclass(frozen=True)
class SphereConventions:
    """The calibrated constants of the sphere calculus.

    Attributes:
        kappa_minus, kappa_plus: d(xη₋ + yη₊) = (κ₊∂₊x + κ₋∂₋y)·dvol.
        s1, s2: d^{⋆L} = s_k·⋆_L d ⋆_L on grade k.
        eta_star: key of ``ETA_STAR_CONVENTIONS``.
        wedge_exchange: ρ in η₊η₋ = ρ·η₋η₊.
        wedge_scale: global constant of the wedge product.
    """

    kappa_minus: ScalarQ
    kappa_plus: ScalarQ
    s1: ScalarQ = ONE
    s2: ScalarQ = ONE
    eta_star: str = "plain"
    wedge_exchange: ScalarQ = ONE
    wedge_scale: ScalarQ = ONE

    def eta_star_factors(self) -> Tuple[ScalarQ, ScalarQ]:
        if self.eta_star not in ETA_STAR_CONVENTIONS:
            raise ConventionError(f"Unknown η-star convention: {self.eta_star}")
        return ETA_STAR_CONVENTIONS[self.eta_star]

    def to_dict(self) -> Dict[str, str]:
        return {
            key: value if isinstance(value, str) else value.to_text()
            for key, value in asdict(self).items()
        }


def _ratio(numerator: ScalarQ, denominator: ScalarQ, what: str) -> ScalarQ:
    if denominator.is_zero():
        raise ConventionError(f"calibration sample for {what} is degenerate")
    return numerator / denominator


def solve_kappa() -> Tuple[ScalarQ, ScalarQ]:
    """κ₋ = 1 and κ₊ from d²(αγ*) = κ₊∂₊∂₋(αγ*) + κ₋∂₋∂₊(αγ*) = 0."""
    sample = ALPHA * GAMMA_STAR
    a = partial_plus(partial_minus(sample))
    b = partial_minus(partial_plus(sample))
    if a.is_zero():
        raise ConventionError("∂₊∂₋ vanishes on the κ calibration sample")
    monomial = a.monomials()[0]
    kappa_plus = -b.coefficient(monomial) / a.coefficient(monomial)
    if not (a.scale(kappa_plus) + b).is_zero():
        raise ConventionError("no κ₊ makes d² vanish on αγ*")
    return ONE, kappa_plus


def _adjointness_residual(phi: BaseForm, psi: BaseForm, conv: SphereConventions) -> ScalarQ:
    return global_inner(base_d(phi, conv), psi) - global_inner(
        phi, codifferential_left(psi, conv)
    )


def calibrate(eta_star: str = "plain") -> SphereConventions:
    """Solves every sphere constant and checks it on a second sample.

    Raises:
        ConventionError: if a sample is degenerate or a recheck fails.
    """
    kappa_minus, kappa_plus = solve_kappa()
    conv = SphereConventions(kappa_minus, kappa_plus, eta_star=eta_star)

    f = BaseForm.zero_form(GAMMA * GAMMA_STAR)
    df = base_d(f, conv)
    s1 = _ratio(
        global_inner(df, df), global_inner(f, codifferential_left(df, conv)), "s1"
    )
    mu = BaseForm.one_form(ALPHA * ALPHA, ALPHA_STAR * ALPHA_STAR)
    dmu = base_d(mu, conv)
    s2 = _ratio(
        global_inner(dmu, dmu), global_inner(mu, codifferential_left(dmu, conv)), "s2"
    )
    conv = replace(conv, s1=s1, s2=s2)

    phi = BaseForm.one_form(ALPHA * ALPHA, AlgebraElement())
    scale = _ratio(
        global_inner(phi, phi), integral(wedge(phi, hodge_left(phi), conv)), "wedge scale"
    )
    conv = replace(conv, wedge_scale=scale)
    psi = BaseForm.one_form(AlgebraElement(), ALPHA_STAR * ALPHA_STAR)
    exchange = _ratio(
        global_inner(psi, psi), integral(wedge(psi, hodge_left(psi), conv)), "wedge exchange"
    )
    conv = replace(conv, wedge_exchange=exchange)

    checks = {
        "adjointness grade 0": _adjointness_residual(
            BaseForm.zero_form(ALPHA * GAMMA_STAR),
            BaseForm.one_form(ALPHA * GAMMA, ALPHA_STAR * GAMMA_STAR),
            conv,
        ),
        "adjointness grade 1": _adjointness_residual(
            BaseForm.one_form(GAMMA * GAMMA, GAMMA_STAR * GAMMA_STAR),
            BaseForm.two_form(GAMMA * GAMMA_STAR),
            conv,
        ),
    }
    for name, residual in checks.items():
        if not residual.is_zero():
            raise ConventionError(f"{name} fails after calibration: {residual.to_text()}")

    anchor = ALPHA * GAMMA_STAR
    if laplacian0(BaseForm.zero_form(anchor), conv).f0 != anchor.scale(
        LAPLACIAN_ANCHOR
    ):
        raise ConventionError("laplacian0(αγ*) misses the eigenvalue ½(1+q²)²")
    logger.info(f"sphere conventions calibrated: {conv.to_dict()}")
    return conv


@lru_cache(maxsize=None)
def get_conventions(eta_star: str = "plain") -> SphereConventions:
    return calibrate(eta_star)


@dataclass
class ConventionReport:
    """Everything needed to reproduce the calibrated calculus elsewhere."""

    ideal: Dict[str, object] = field(default_factory=dict)
    basis: Dict[str, str] = field(default_factory=dict)
    calibration: Dict[str, str] = field(default_factory=dict)
    circ_table: Dict[str, str] = field(default_factory=dict)
    circle: Dict[str, str] = field(default_factory=dict)
    sphere: Dict[str, str] = field(default_factory=dict)
    anchors: Dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Dict]:
        return asdict(self)

    def is_valid(self) -> bool:
        return bool(self.ideal.get("valid")) and all(
            value == "0" for value in self.anchors.values()
        )


def convention_report(conventions: SphereConventions = None) -> ConventionReport:
    """Collects the calibrated constants and the residuals of their anchors."""
    data = get_germs_data()
    conv = conventions or get_conventions()
    connection = get_canonical_connection()
    circle = get_circle_calculus()

    report = ConventionReport()
    counits = data.ideal_counits()
    report.ideal = {
        "generators": [label for label, _ in data.ideal_generators],
        "counits": {label: value.to_text() for label, value in counits.items()},
        "quotient_dimensions": {str(k): v for k, v in data.quotient_dimensions.items()},
        "valid": all(v.is_zero() for v in counits.values())
        and all(v == 3 for v in data.quotient_dimensions.values()),
    }
    report.basis = {name: rep.to_text() for name, rep in data.basis_choice}
    report.calibration = {
        "c_minus": data.generator_germs[Generator.GAMMA_STAR].c_minus.to_text(),
        "c_zero": connection.c_zero.to_text(),
        "c_plus": data.generator_germs[Generator.GAMMA].c_plus.to_text(),
    }
    report.circ_table = {
        f"eta_{name} o {g.value}": form.to_text()
        for (name, g), form in sorted(
            data.circ_table.items(), key=lambda item: (item[0][0], item[0][1].value)
        )
    }
    report.circle = {
        "germ_z": circle.germ_z.to_text(),
        "circ_z": circle.circ_z.to_text(),
        "circ_zstar": circle.circ_zstar.to_text(),
    }
    report.sphere = conv.to_dict()

    p = ONE_ELEMENT - (GAMMA * GAMMA_STAR).scale(ONE + Q2)
    report.anchors = {
        "d^2(alpha gamma*)": base_d(
            base_d(BaseForm.zero_form(ALPHA * GAMMA_STAR), conv), conv
        ).p.to_text(),
        "laplacian0(1 - (1+q^2) gamma gamma*)": (
            laplacian0(BaseForm.zero_form(p), conv).f0 - p.scale(LAPLACIAN_ANCHOR)
        ).to_text(),
        "laplacian0(alpha gamma*)": (
            laplacian0(BaseForm.zero_form(ALPHA * GAMMA_STAR), conv).f0
            - (ALPHA * GAMMA_STAR).scale(LAPLACIAN_ANCHOR)
        ).to_text(),
        "curvature(0) - (1+q^2)q dvol": (
            curvature().p - ONE_ELEMENT.scale(CURVATURE_COEFFICIENT)
        ).to_text(),
    }
    return report
