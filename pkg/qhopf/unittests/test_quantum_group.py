import unittest
import sys
import os
current = os.path.dirname(os.path.realpath(__file__))
sys.path.append(os.path.dirname(os.path.dirname(current)))

from qhopf.coefficients import ScalarQ
from qhopf.quantum_group.hopf import antipode_monomial
from qhopf.quantum_group import (
    ALPHA,
    ALPHA_STAR,
    GAMMA,
    GAMMA_STAR,
    ONE_ELEMENT,
    AlgebraElement,
    Generator,
    Monomial,
    antipode,
    coaction,
    coproduct,
    coproduct_monomial,
    counit,
    counit_monomial,
    in_sphere,
    monomials_up_to_length,
    normal_form,
)
from qhopf.utils import set_seed

Q = ScalarQ.q_power(1)
Q2 = ScalarQ.q_power(2)


def _star_monomial(m):
    return AlgebraElement.from_monomial(m).star()


def _add(out, key, value):
    out[key] = out[key] + value if key in out else value


def _split_left(t):
    """(φ ⊗ id)t as a dict over monomial triples."""
    out = {}
    for (m1, m2), c in t.items():
        for (n1, n2), d in coproduct_monomial(m1).items():
            _add(out, (n1, n2, m2), c * d)
    return {key: c for key, c in out.items() if not c.is_zero()}


def _split_right(t):
    """(id ⊗ φ)t as a dict over monomial triples."""
    out = {}
    for (m1, m2), c in t.items():
        for (n1, n2), d in coproduct_monomial(m2).items():
            _add(out, (m1, n1, n2), c * d)
    return {key: c for key, c in out.items() if not c.is_zero()}


class TestRelations(unittest.TestCase):

    def test_commutation_relations(self):
        self.assertEqual(GAMMA * ALPHA, (ALPHA * GAMMA).scale(Q.inverse()),
                         msg="γα = q⁻¹αγ failed")
        self.assertEqual(GAMMA_STAR * GAMMA, GAMMA * GAMMA_STAR, msg="γ*γ = γγ* failed")

    def test_unitarity_relations(self):
        self.assertEqual(ALPHA_STAR * ALPHA + GAMMA_STAR * GAMMA, ONE_ELEMENT,
                         msg="α*α + γ*γ = 1 failed")
        self.assertEqual(ALPHA * ALPHA_STAR + (GAMMA * GAMMA_STAR).scale(Q2), ONE_ELEMENT,
                         msg="αα* + q²γγ* = 1 failed")

    def test_confluence(self):
        rng = set_seed(0)
        generators = list(Generator)
        for _ in range(30):
            length = int(rng.integers(2, 9))
            word = [generators[i] for i in rng.integers(0, len(generators), size=length)]
            expected = normal_form(word)
            for seed in range(3):
                self.assertEqual(normal_form(word, strategy="random", seed=seed), expected,
                                 msg=f"rewriting is not confluent on {word}")

    def test_normal_form_matches_product(self):
        word = [Generator.ALPHA_STAR, Generator.GAMMA, Generator.ALPHA]
        self.assertEqual(normal_form(word), ALPHA_STAR * GAMMA * ALPHA,
                         msg="normal_form and multiplication disagree")

    def test_star_is_antimultiplicative(self):
        a = ALPHA * GAMMA + GAMMA_STAR.scale(Q)
        b = ALPHA_STAR * GAMMA_STAR * GAMMA
        self.assertEqual((a * b).star(), b.star() * a.star(), msg="(ab)* = b*a* failed")

    def test_degree(self):
        self.assertEqual((ALPHA * GAMMA_STAR).degree(), 0, msg="degree failed")
        self.assertEqual((ALPHA + ALPHA_STAR).degree(), "mixed", msg="mixed degree failed")
        self.assertEqual(Monomial(2, 1, 0).left_degree, 1, msg="left_degree failed")


class TestHopf(unittest.TestCase):

    def setUp(self):
        self.monomials = [m for m in monomials_up_to_length(3)]

    def test_counit_axiom(self):
        for m in self.monomials:
            a = AlgebraElement.from_monomial(m)
            t = coproduct(a)
            self.assertEqual(t.apply_left(counit_monomial), a, msg=f"(ε⊗id)φ failed on {m}")
            self.assertEqual(t.apply_right(counit_monomial), a, msg=f"(id⊗ε)φ failed on {m}")

    def test_antipode_axiom(self):
        for m in self.monomials:
            a = AlgebraElement.from_monomial(m)
            t = coproduct(a)
            value = t.map_legs(antipode_monomial, AlgebraElement.from_monomial).multiply_legs()
            self.assertEqual(value, AlgebraElement.scalar(counit(a)),
                             msg=f"m(κ⊗id)φ failed on {m}")

    def test_coproduct_is_multiplicative(self):
        a, b = ALPHA * GAMMA, GAMMA_STAR
        self.assertTrue((coproduct(a * b) - coproduct(a) * coproduct(b)).is_zero(),
                        msg="φ(ab) = φ(a)φ(b) failed")

    def test_coassociativity(self):
        for m in monomials_up_to_length(3):
            t = coproduct(AlgebraElement.from_monomial(m))
            self.assertEqual(_split_left(t), _split_right(t), msg=f"coassociativity failed on {m}")

    def test_coproduct_commutes_with_star(self):
        for m in monomials_up_to_length(3):
            a = AlgebraElement.from_monomial(m)
            starred = coproduct(a).map_legs(_star_monomial, _star_monomial)
            self.assertEqual(coproduct(a.star()), starred, msg=f"φ(a*) failed on {m}")

    def test_antipode_on_generators(self):
        self.assertEqual(antipode(ALPHA), ALPHA_STAR, msg="κ(α) failed")
        self.assertEqual(antipode(GAMMA), GAMMA.scale(-Q), msg="κ(γ) failed")


class TestCoaction(unittest.TestCase):

    def test_sphere_membership(self):
        self.assertTrue(in_sphere(GAMMA * GAMMA_STAR), msg="γγ* is in the sphere")
        self.assertTrue(in_sphere(ALPHA * GAMMA_STAR), msg="αγ* is in the sphere")
        self.assertFalse(in_sphere(ALPHA), msg="α is not in the sphere")

    def test_weights(self):
        parts = coaction(ALPHA + GAMMA_STAR * GAMMA_STAR)
        self.assertEqual(sorted(parts), [-2, 1], msg="coaction weights failed")


if __name__ == "__main__":
    unittest.main()
