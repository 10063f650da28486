import unittest
import sys
import os
from fractions import Fraction
current = os.path.dirname(os.path.realpath(__file__))
sys.path.append(os.path.dirname(os.path.dirname(current)))

from qhopf.coefficients import ONE, ScalarQ, q_int
from qhopf.errors import DegreeError, FiltrationError
from qhopf.quantum_group import ALPHA, ALPHA_STAR, GAMMA, GAMMA_STAR, AlgebraElement
from qhopf.sphere import BaseForm, base_d
from qhopf.bundles import Section
from qhopf.yang_mills import (
    CANONICAL,
    Displacement,
    YMSMTriple,
    calibrate_gauge_constant,
    find_primitive,
    gauge_constant_law,
    gauge_scan,
    is_yang_mills,
    matter_potential,
    probe_family,
    recovered_winding,
    ym_check,
    ym_residual,
    ym_variation,
    ymsm_gauge_residual,
    ymsm_matter_residual,
)

X = GAMMA * GAMMA_STAR


class TestFields(unittest.TestCase):

    def test_solution_triples(self):
        t = YMSMTriple.solution(2, "gamma")
        self.assertEqual(t.T1.value, GAMMA * GAMMA, msg="T₁ = γ² failed")
        self.assertEqual(t.T2.n, -2, msg="T₂ winding failed")
        self.assertEqual(t.Vprime, ScalarQ(Fraction(1, 2)) * ScalarQ.q_power(4) * q_int(2), msg="V′ failed")
        with self.assertRaises(ValueError):
            YMSMTriple.solution(1, "beta")
        with self.assertRaises(ValueError):
            YMSMTriple.solution(-1)

    def test_winding_mismatch(self):
        with self.assertRaises(DegreeError):
            YMSMTriple(CANONICAL, Section(1, ALPHA), Section(1, GAMMA), ONE)

    def test_displacement_grade(self):
        with self.assertRaises(DegreeError):
            Displacement(BaseForm.zero_form(X))
        self.assertTrue(CANONICAL.is_zero(), msg="canonical displacement is zero")

    def test_recovered_winding(self):
        for n in range(1, 6):
            self.assertLess(abs(recovered_winding(n) - n) / n, 1e-2, msg=f"winding {n} not recovered")
        self.assertEqual(matter_potential(0), ScalarQ(0), msg="V′ at n = 0 failed")


class TestYangMills(unittest.TestCase):

    def test_canonical_is_yang_mills(self):
        self.assertTrue(is_yang_mills(CANONICAL), msg="ω^c should be Yang–Mills")

    def test_exact_displacement_is_yang_mills(self):
        self.assertTrue(is_yang_mills(Displacement.exact(ALPHA * GAMMA_STAR)),
                        msg="ω^c + dp should be Yang–Mills")

    def test_variation_vanishes_at_flat_displacement(self):
        direction = probe_family(2)[0]
        self.assertTrue(ym_variation(CANONICAL, direction).is_zero(), msg="variation at ω^c failed")

    def test_primitive(self):
        p = X + ALPHA * GAMMA_STAR
        self.assertEqual(find_primitive(base_d(BaseForm.zero_form(p)), 2), p, msg="primitive failed")
        self.assertEqual(find_primitive(BaseForm.zero(1), 2), AlgebraElement(), msg="zero primitive")

    def test_primitive_errors(self):
        closed = base_d(BaseForm.zero_form(X))
        with self.assertRaises(FiltrationError):
            find_primitive(closed, 1)
        with self.assertRaises(DegreeError):
            find_primitive(BaseForm.zero_form(X), 2)
        with self.assertRaises(ValueError):
            find_primitive(BaseForm.one_form(ALPHA * GAMMA, AlgebraElement()), 2)

    def test_open_displacement_is_not_yang_mills(self):
        d = Displacement(BaseForm.one_form(ALPHA * GAMMA, AlgebraElement()))
        left, right = ym_residual(d)
        self.assertFalse(left.is_zero(), msg="d^⋆L should see a non-closed λ")
        self.assertFalse(right.is_zero(), msg="d^⋆R should see a non-closed λ")
        self.assertFalse(is_yang_mills(d), msg="non-closed λ is not Yang–Mills")

    def test_variation_is_negative_along_itself(self):
        d = Displacement(BaseForm.one_form(ALPHA * GAMMA, AlgebraElement()))
        for q0 in (Fraction(1, 2), Fraction(9, 10)):
            value = ym_variation(d, d).evaluate(q0)
            self.assertLess(float(value), 0.0, msg=f"variation at q={q0} failed")


class TestScalarMatter(unittest.TestCase):

    def test_matter_equations(self):
        for family in ("alpha", "gamma"):
            for n in (1, 2, 3):
                left, right = ymsm_matter_residual(YMSMTriple.solution(n, family))
                self.assertTrue(left.is_zero() and right.is_zero(),
                                msg=f"matter equation failed for {family} n={n}")

    def test_gauge_constant(self):
        family = probe_family(3)
        for n in (1, 2):
            t = YMSMTriple.solution(n)
            constant = calibrate_gauge_constant(t, family)
            self.assertEqual(constant, gauge_constant_law(n), msg=f"ρ at n={n} failed")
            residuals = gauge_scan(t, family, constant)
            self.assertTrue(all(r.is_zero() for r in residuals), msg=f"gauge residual at n={n}")

    def test_frozen_law_on_both_families(self):
        family = probe_family(4)
        for kind in ("alpha", "gamma"):
            for n in (1, 2, 3):
                residuals = gauge_scan(YMSMTriple.solution(n, kind), family)
                self.assertTrue(all(r.is_zero() for r in residuals),
                                msg=f"frozen ρ leaves a residual for {kind} n={n}")

    def test_frozen_law_on_long_words(self):
        for n in (1, 2):
            t = YMSMTriple.solution(n)
            for d in probe_family(6):
                self.assertTrue(ymsm_gauge_residual(t, d).is_zero(),
                                msg=f"residual at n={n} along {d.lam_of_sigma.to_text()}")

    def test_n1_constant_fails_at_higher_windings(self):
        frozen = gauge_constant_law(1)
        for n in (2, 3):
            residuals = gauge_scan(YMSMTriple.solution(n), probe_family(4), frozen)
            self.assertTrue(any(not r.is_zero() for r in residuals),
                            msg=f"n=1 constant should not serve n={n}")

    def test_family_has_mixed_and_summed_forms(self):
        family = probe_family(4)
        mixed = [d for d in family
                 if not d.lam_of_sigma.x.is_zero() and not d.lam_of_sigma.y.is_zero()]
        summed = [d for d in family if len(d.lam_of_sigma.x) > 1 or len(d.lam_of_sigma.y) > 1]
        self.assertTrue(mixed, msg="no mixed xη₋ + yη₊ displacement")
        self.assertTrue(summed, msg="no displacement with non-monomial coefficients")
        self.assertGreater(len(probe_family(6)), len(family), msg="length 6 adds words")
        with self.assertRaises(ValueError):
            probe_family(1)

    def test_trivial_winding(self):
        t = YMSMTriple.solution(0)
        for direction in probe_family(2):
            self.assertTrue(ymsm_gauge_residual(t, direction).is_zero(), msg="n = 0 gauge residual")

    def test_report(self):
        reports = ym_check([YMSMTriple.solution(1)], probe_length=2)
        self.assertEqual(len(reports), 1, msg="one report per triple")
        report = reports[0]
        self.assertEqual(report["ym_residual_norms"], [0, 0], msg="ym residual failed")
        self.assertTrue(report["primitive_found"], msg="zero displacement has a primitive")
        self.assertEqual(report["ymsm_matter_residuals"], ["0", "0"], msg="matter residuals failed")
        self.assertTrue(report["gauge_constant_matches_law"], msg="gauge law failed")
        self.assertEqual(report["gauge_residual_max"], 0.0, msg="gauge residual failed")
        self.assertTrue(report["passed"], msg="solution triple should pass")

    def test_report_flags_failures(self):
        wrong_potential = YMSMTriple.solution(1, Vprime=ONE)
        open_connection = YMSMTriple.solution(
            1, omega=Displacement(BaseForm.one_form(ALPHA * GAMMA, AlgebraElement()))
        )
        reports = ym_check([wrong_potential, open_connection], probe_length=2)
        self.assertFalse(reports[0]["passed"], msg="V′ = 1 should fail the matter equation")
        self.assertNotEqual(reports[0]["ymsm_matter_residuals"], ["0", "0"],
                            msg="matter residuals should be reported")
        self.assertFalse(reports[1]["passed"], msg="non-closed λ should fail")
        self.assertNotEqual(reports[1]["ym_residual_norms"], [0, 0], msg="ym residual missing")


if __name__ == "__main__":
    unittest.main()
