"""The Haar state h of SU_q(2).

h vanishes on every PBW monomial except the powers of x = γγ*, and its
values h(x^k) are solved block by block from the infinitesimal invariance
h∘∂₋ = 0 on the probes α*γ*x^k (each probe adds exactly one new unknown).
"""

import logging
import threading
from typing import List, Tuple

from .calculus.derivatives import partial_minus
from .coefficients import ONE, ZERO, ScalarQ, q_number
from .errors import ConventionError
from .quantum_group import AlgebraElement, Monomial, coproduct

logger = logging.getLogger(__name__)


class HaarState:
    """Lazily extended table of the moments h(x^k).

    The table only grows, under a lock, so concurrent callers see the same
    values whichever thread extends it first.
    """

    def __init__(self):
        self._moments: List[ScalarQ] = [ONE]
        self._lock = threading.Lock()

    def moment(self, k: int) -> ScalarQ:
        """h((γγ*)^k)."""
        if k < 0:
            raise ValueError(f"moment index must be >= 0, got {k}")
        if k >= len(self._moments):
            with self._lock:
                while k >= len(self._moments):
                    self._extend()
        return self._moments[k]

    def _extend(self) -> None:
        k = len(self._moments) - 1
        probe = AlgebraElement.from_monomial(Monomial(-1, k, k + 1))
        image = partial_minus(probe)
        known = ZERO
        lead = ZERO
        for m, c in image.items():
            if m.a_power != 0 or m.k != m.l:
                continue
            if m.k <= k:
                known = known + c * self._moments[m.k]
            elif m.k == k + 1:
                lead = c
            else:
                raise ConventionError(f"Haar probe {probe.to_text()} reaches x^{m.k}")
        if lead.is_zero():
            raise ConventionError(f"Haar probe {probe.to_text()} does not fix h(x^{k + 1})")
        self._moments.append(-known / lead)
        logger.debug(f"h(x^{k + 1}) = {self._moments[-1].to_text()}")

    def monomial(self, m: Monomial) -> ScalarQ:
        if m.a_power != 0 or m.k != m.l:
            return ZERO
        return self.moment(m.k)

    def __call__(self, a: AlgebraElement) -> ScalarQ:
        return a.apply_functional(self.monomial)


HAAR = HaarState()


def haar(a: AlgebraElement) -> ScalarQ:
    """h(a), the normalized invariant functional.

    Examples:
        >>> haar(GAMMA * GAMMA_STAR).to_text()
        '(1)/(1 + 1*q^2)'
    """
    return HAAR(a)


def haar_monomial(m: Monomial) -> ScalarQ:
    return HAAR.monomial(m)


def haar_closed_form(k: int) -> ScalarQ:
    """h(x^k) = 1/[k+1]."""
    return ONE / q_number(k + 1)


def alpha_moment_closed_form(n: int) -> ScalarQ:
    """h(α^nα*^n) = 1/[n+1]."""
    if n < 0:
        raise ValueError(f"moment index must be >= 0, got {n}")
    return ONE / q_number(n + 1)


def invariance_residuals(a: AlgebraElement) -> Tuple[AlgebraElement, AlgebraElement]:
    """((h⊗id)φ(a) − h(a)𝟙, (id⊗h)φ(a) − h(a)𝟙); both vanish."""
    t = coproduct(a)
    value = AlgebraElement.scalar(haar(a))
    return t.apply_left(haar_monomial) - value, t.apply_right(haar_monomial) - value
