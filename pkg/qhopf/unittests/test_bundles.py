import unittest
import sys
import os
from fractions import Fraction
current = os.path.dirname(os.path.realpath(__file__))
sys.path.append(os.path.dirname(os.path.dirname(current)))

from qhopf.bundles import (
    BundleForm,
    GeneratorSet,
    Section,
    classify_row,
    form_inner,
    generator_set,
    nabla,
    nabla_left,
    nabla_right,
    row5_growth_decomposition,
    section_inner,
    table_entry,
    verify_generators,
)
from qhopf.coefficients import ONE, ScalarQ, q_binomial
from qhopf.errors import ConventionError, DegreeError
from qhopf.quantum_group import ALPHA, ALPHA_STAR, GAMMA, GAMMA_STAR, Monomial

HALF = ScalarQ(Fraction(1, 2))
Q2 = ScalarQ.q_power(2)


class TestGenerators(unittest.TestCase):

    def test_identities(self):
        for n in range(-3, 4):
            report = verify_generators(generator_set(n))
            self.assertTrue(report.ok, msg=f"generator identities failed for n = {n}")

    def test_column_shape(self):
        g = generator_set(2)
        self.assertEqual(len(g), 3, msg="column length failed")
        self.assertEqual(g.monomials[0], Monomial(2, 0, 0), msg="first entry is α²")
        self.assertEqual(g.squared_coeffs[1], q_binomial(2, 1, ScalarQ.q_power(-2)),
                         msg="squared coefficient failed")
        self.assertEqual(generator_set(-1).monomials, (Monomial(0, 0, 1), Monomial(-1, 0, 0)),
                         msg="n = -1 column failed")

    def test_strict_raises(self):
        g = generator_set(1)
        broken = GeneratorSet(n=1, squared_coeffs=(ONE, ONE + Q2), monomials=g.monomials, Z=g.Z)
        with self.assertRaises(ConventionError):
            verify_generators(broken, strict=True)


class TestCovariant(unittest.TestCase):

    def test_section_degree(self):
        self.assertEqual(Section.of(ALPHA * ALPHA).n, 2, msg="winding inference failed")
        with self.assertRaises(DegreeError):
            Section(1, GAMMA_STAR)
        with self.assertRaises(DegreeError):
            Section.of(ALPHA + GAMMA_STAR)

    def test_left_is_twisted_right(self):
        for value in (ALPHA, ALPHA_STAR * GAMMA_STAR, ALPHA * GAMMA * GAMMA_STAR):
            s = Section.of(value)
            twisted = nabla_right(s).scale(ScalarQ.q_power(s.n))
            self.assertEqual(nabla_left(s), twisted, msg=f"∇_L = q^n ∇_R failed on {value.to_text()}")

    def test_nabla_dispatch(self):
        s = Section.of(GAMMA)
        self.assertEqual(nabla("right", s), nabla_right(s), msg="dispatch failed")
        with self.assertRaises(ValueError):
            nabla("middle", s)

    def test_bundle_form_degrees(self):
        with self.assertRaises(DegreeError):
            BundleForm(0, x=GAMMA_STAR)

    def test_inner_products_are_positive(self):
        value = ALPHA + GAMMA.scale(3)
        for side in ("left", "right"):
            norm = section_inner(side, value, value)
            self.assertGreater(float(norm.evaluate(0.5)), 0, msg=f"{side} section norm failed")
            form = nabla(side, Section.of(value))
            self.assertGreater(float(form_inner(side, form, form).evaluate(0.5)), 0,
                               msg=f"{side} form norm failed")


class TestTables(unittest.TestCase):

    def test_classification(self):
        cases = {
            Monomial(0, 0, 0): 1,
            Monomial(2, 1, 0): 2,
            Monomial(-2, 0, 0): 3,
            Monomial(-1, 0, 1): 4,
            Monomial(2, 0, 1): 5,
            Monomial(-1, 1, 0): 6,
            Monomial(0, 1, 1): 7,
            Monomial(1, 1, 1): 8,
            Monomial(-1, 1, 1): 9,
        }
        for mono, row in cases.items():
            self.assertEqual(classify_row("left", mono), row, msg=f"left row of {mono} failed")
        self.assertEqual(classify_row("right", Monomial(2, 0, 0)), 3, msg="right row 3 failed")
        self.assertEqual(classify_row("right", Monomial(0, 2, 0)), 3, msg="right row 3 failed")
        self.assertEqual(classify_row("right", Monomial(1, 1, 0)), 2, msg="right row 2 failed")

    def test_golden_values(self):
        self.assertEqual(table_entry("left", Monomial(1, 0, 0)).value,
                         HALF * ScalarQ.q_power(4), msg="Δ_L α failed")
        self.assertEqual(table_entry("right", Monomial(1, 0, 0)).value, HALF, msg="Δ_R α failed")
        self.assertEqual(table_entry("left", Monomial(-1, 0, 0)).value, HALF, msg="Δ_L α* failed")
        self.assertEqual(table_entry("left", Monomial(-1, 1, 0)).value,
                         HALF + Q2 + HALF * ScalarQ.q_power(4), msg="left row 6 of α*γ failed")

    def test_growth_decomposition(self):
        for m, l in ((1, 1), (2, 1), (3, 2)):
            entry = table_entry("left", Monomial(m, 0, l))
            self.assertEqual(entry.row, 5, msg="row 5 expected")
            self.assertEqual(entry.value, row5_growth_decomposition(m, l),
                             msg=f"row 5 rewrite failed at m = {m}, l = {l}")


if __name__ == "__main__":
    unittest.main()
