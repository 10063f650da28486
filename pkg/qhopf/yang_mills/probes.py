"""The finite family of displacements standing in for "all λ"."""

from functools import lru_cache
from typing import List

from ..coefficients import ScalarQ
from ..quantum_group import AlgebraElement, monomials_up_to_length
from ..sphere import BaseForm
from .fields import Displacement

PROBE_LENGTH = 6


def _weighted_sum(monomials) -> AlgebraElement:
    """Σ_i q^i M_i, a section with non-monomial coefficients."""
    return AlgebraElement({m: ScalarQ.q_power(i) for i, m in enumerate(monomials)})


@lru_cache(maxsize=None)
def _probe_family(length: int) -> tuple:
    pool = monomials_up_to_length(length)
    xs = [m for m in pool if m.degree == 2]
    ys = [m for m in pool if m.degree == -2]
    zero = AlgebraElement()
    probes = [
        Displacement(BaseForm.one_form(AlgebraElement.from_monomial(m), zero)) for m in xs
    ]
    probes += [
        Displacement(BaseForm.one_form(zero, AlgebraElement.from_monomial(m))) for m in ys
    ]
    # mixed xη₋ + yη₊, pairing the two pools in order
    probes += [
        Displacement(
            BaseForm.one_form(AlgebraElement.from_monomial(x), AlgebraElement.from_monomial(y))
        )
        for x, y in zip(xs, ys)
    ]
    probes.append(Displacement(BaseForm.one_form(_weighted_sum(xs), _weighted_sum(ys))))
    probes.append(Displacement(BaseForm.one_form(zero, _weighted_sum(reversed(ys)))))
    return tuple(probes)


def probe_family(length: int = PROBE_LENGTH) -> List[Displacement]:
    """Displacements λ(ς) with coefficient words of length ≤ ``length``.

    The family holds Mη₋ for every deg M = 2 and Mη₊ for every deg M = −2,
    the mixed forms xη₋ + yη₊ pairing those monomials, and two forms whose
    coefficients are q-weighted sums over the whole pools.
    """
    if length < 2:
        raise ValueError(f"probe words need length at least 2, got {length}")
    return list(_probe_family(length))
