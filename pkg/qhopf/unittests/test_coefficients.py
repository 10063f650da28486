import unittest
import sys
import os
from fractions import Fraction
current = os.path.dirname(os.path.realpath(__file__))
sys.path.append(os.path.dirname(os.path.dirname(current)))

from qhopf.coefficients import ONE, ZERO, ScalarQ, q_binomial, q_factorial, q_int, q_number
from qhopf.errors import PoleError, QHopfParseError

Q2 = ScalarQ.q_power(2)


class TestScalarQ(unittest.TestCase):

    def test_cancellation(self):
        value = (ONE - Q2 * Q2) / (ONE - Q2)
        self.assertEqual(value, ONE + Q2, msg="rational cancellation failed")
        self.assertTrue(value.is_laurent(), msg="is_laurent failed")

    def test_canonical_text(self):
        self.assertEqual((ONE + Q2).to_text(), "1 + 1*q^2", msg="to_text failed")
        self.assertEqual(ScalarQ(Fraction(1, 2)).to_text(), "1/2", msg="to_text failed")
        self.assertEqual(ZERO.to_text(), "0", msg="to_text of zero failed")

    def test_parse_text(self):
        value = ONE / (ONE + Q2) + ScalarQ.q_power(-3)
        self.assertEqual(ScalarQ.parse(value.to_text()), value, msg="parse failed")

    def test_parse_error(self):
        with self.assertRaises(QHopfParseError):
            ScalarQ.parse("q +* 1")

    def test_evaluate(self):
        value = ONE / (ONE - Q2)
        self.assertEqual(value.evaluate(Fraction(1, 2)), Fraction(4, 3), msg="evaluate failed")
        with self.assertRaises(PoleError):
            value.evaluate(1)

    def test_hash_consistent_with_equality(self):
        a = (ONE + Q2) * (ONE - Q2)
        b = ONE - Q2 * Q2
        self.assertEqual(hash(a), hash(b), msg="hash of equal values differs")


class TestQNumbers(unittest.TestCase):

    def test_q_int(self):
        self.assertEqual(q_int(0), ZERO, msg="[0] failed")
        self.assertEqual(q_int(3), ONE + Q2 + Q2 * Q2, msg="[3] failed")
        self.assertEqual(q_int(-2), -ScalarQ.q_power(-4) * q_int(2), msg="[-2] failed")

    def test_q_number_domain(self):
        with self.assertRaises(ValueError):
            q_number(0)

    def test_q_factorial(self):
        self.assertEqual(q_factorial(3), q_int(1) * q_int(2) * q_int(3), msg="[3]! failed")

    def test_q_binomial(self):
        base = ScalarQ.q_power(-2)
        self.assertEqual(q_binomial(2, 1, base), ONE + base, msg="q_binomial(2, 1) failed")
        self.assertEqual(q_binomial(4, 0, base), ONE, msg="q_binomial(4, 0) failed")
        self.assertEqual(q_binomial(2, 3, base), ZERO, msg="q_binomial(2, 3) failed")

    def test_classical_limit(self):
        self.assertEqual(q_int(5).evaluate(1), 5, msg="[5] at q = 1 failed")
        self.assertEqual(q_binomial(4, 2, Q2).evaluate(1), 6, msg="binomial at q = 1 failed")


if __name__ == "__main__":
    unittest.main()
