import unittest
import sys
import os
import threading
from fractions import Fraction
current = os.path.dirname(os.path.realpath(__file__))
sys.path.append(os.path.dirname(os.path.dirname(current)))

import numpy as np
import sympy

from qhopf.coefficients import ONE, ZERO, ScalarQ
from qhopf.haar import (
    HaarState,
    alpha_moment_closed_form,
    haar,
    haar_closed_form,
    invariance_residuals,
)
from qhopf.quantum_group import (
    ALPHA,
    ALPHA_STAR,
    GAMMA,
    GAMMA_STAR,
    ONE_ELEMENT,
    AlgebraElement,
    monomials_up_to_length,
)

X = GAMMA * GAMMA_STAR


def _rational(value):
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


class TestHaar(unittest.TestCase):

    def test_normalization(self):
        self.assertEqual(haar(ONE_ELEMENT), ONE, msg="h(1) = 1 failed")

    def test_moments(self):
        self.assertEqual(haar(X), ONE / (ONE + ScalarQ.q_power(2)), msg="h(γγ*) failed")
        for k in range(5):
            self.assertEqual(haar(X ** k), haar_closed_form(k), msg=f"h(x^{k}) failed")

    def test_alpha_moments(self):
        for n in range(4):
            value = haar((ALPHA ** n) * (ALPHA_STAR ** n))
            self.assertEqual(value, alpha_moment_closed_form(n), msg=f"h(α^nα*^n) failed for n = {n}")

    def test_vanishing(self):
        for a in (ALPHA, GAMMA, ALPHA * GAMMA_STAR, ALPHA_STAR * ALPHA_STAR * GAMMA * GAMMA):
            self.assertEqual(haar(a), ZERO, msg=f"h({a.to_text()}) should vanish")

    def test_positivity_on_squares(self):
        a = ALPHA + GAMMA.scale(2)
        value = haar(a.star() * a)
        for q0 in (0.5, -0.5, 0.9):
            self.assertGreater(float(value.evaluate(q0)), 0, msg="h(a*a) > 0 failed")

    def test_gram_is_positive_definite(self):
        basis = [AlgebraElement.from_monomial(m) for m in monomials_up_to_length(5)
                 if m.degree == 1]
        for q0 in (Fraction(1, 2), Fraction(9, 10)):
            gram = sympy.Matrix([[_rational(haar(a * b.star()).evaluate(q0)) for b in basis]
                                 for a in basis])
            self.assertEqual(gram, gram.T, msg="Gram matrix is not symmetric")
            self.assertTrue(gram.is_positive_definite, msg=f"Gram matrix at q={q0} failed")
            eigenvalues = np.linalg.eigvalsh(np.array(gram.evalf(30).tolist(), dtype=float))
            self.assertGreater(eigenvalues.min(), 0.0, msg="smallest eigenvalue failed")

    def test_invariance(self):
        for m in monomials_up_to_length(6):
            left, right = invariance_residuals(AlgebraElement.from_monomial(m))
            self.assertTrue(left.is_zero() and right.is_zero(),
                            msg=f"invariance failed on {m}")

    def test_concurrent_fill(self):
        state = HaarState()
        results = {}

        def work(k):
            results[k] = state.moment(k)

        threads = [threading.Thread(target=work, args=(k,)) for k in (4, 2, 5, 3)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        for k, value in results.items():
            self.assertEqual(value, haar_closed_form(k), msg="concurrent moments differ")


if __name__ == "__main__":
    unittest.main()
