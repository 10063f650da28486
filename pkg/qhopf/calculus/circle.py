"""The 1D bicovariant calculus Γ on the structure group U(1) = ℂ[z, z*]."""

from dataclasses import dataclass
from functools import lru_cache

from ..coefficients import ONE, ZERO, ScalarQ
from ..errors import ConventionError


@dataclass(frozen=True)
class CircleCalculus:
    """Germs π′ and the right action ∘ on the invariant basis ς.

    Attributes:
        germ_z: coefficient of ς in π′(z).
        circ_z: the twist ς∘z.
        circ_zstar: the twist ς∘z*.
    """

    germ_z: ScalarQ
    circ_z: ScalarQ
    circ_zstar: ScalarQ

    @classmethod
    def from_twists(cls, circ_z: ScalarQ, circ_zstar: ScalarQ) -> "CircleCalculus":
        """Solves π′(zz*) = 0 and π′(z − z*) = ς for the germ of z.

        π′(zz*) = π′(z*) + π′(z)∘z* gives π′(z*) = −circ_zstar·π′(z).
        """
        if not (circ_z * circ_zstar - ONE).is_zero():
            raise ConventionError("ς∘z and ς∘z* must be inverse to each other")
        return cls(
            germ_z=ONE / (ONE + circ_zstar), circ_z=circ_z, circ_zstar=circ_zstar
        )

    @property
    def germ_zstar(self) -> ScalarQ:
        return -self.circ_zstar * self.germ_z

    def circ_power(self, n: int) -> ScalarQ:
        """ς∘z^n (z^n for n < 0 means z*^{|n|})."""
        if n >= 0:
            return self.circ_z**n
        return self.circ_zstar ** (-n)

    def germ_power(self, n: int) -> ScalarQ:
        """g_n, the coefficient of ς in π′(z^n).

        Unrolls π′(a·b) = ε(a)π′(b) + π′(a)∘b with ε(z) = ε(z*) = 1.
        """
        if n == 0:
            return ZERO
        step, generator_germ = (
            (self.circ_z, self.germ_z) if n > 0 else (self.circ_zstar, self.germ_zstar)
        )
        value = ZERO
        for _ in range(abs(n)):
            # π′(z^m·z) = π′(z) + π′(z^m)∘z
            value = generator_germ + value * step
        return value

    def sigma_germ(self) -> ScalarQ:
        """Coefficient of ς in π′(z − z*); equals 1."""
        return self.germ_z - self.germ_zstar


@lru_cache(maxsize=None)
def get_circle_calculus() -> CircleCalculus:
    return CircleCalculus.from_twists(ScalarQ.q_power(-2), ScalarQ.q_power(2))


def g_closed_form(n: int) -> ScalarQ:
    """(Σ_{j<n} q^{−2j})/(1+q²) for n ≥ 1."""
    if n < 1:
        raise ValueError(f"closed form holds for n >= 1, got {n}")
    total = ZERO
    for j in range(n):
        total = total + ScalarQ.q_power(-2 * j)
    return total / (ONE + ScalarQ.q_power(2))
