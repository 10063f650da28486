from .laurent import LaurentPoly
from .scalar import ONE, Q, Q_FIELD, ZERO, ScalarQ, scalar_arith
from .qnumbers import q_binomial, q_factorial, q_int, q_number, q_number_at


def evaluate(a: ScalarQ, q0):
    """Value of ``a`` at ``q0`` (exact for rationals, float for floats)."""
    return a.evaluate(q0)
