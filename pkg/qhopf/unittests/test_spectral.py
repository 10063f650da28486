import unittest
import sys
import os
import tempfile
from unittest import mock
current = os.path.dirname(os.path.realpath(__file__))
sys.path.append(os.path.dirname(os.path.dirname(current)))

from qhopf.bundles import (
    LaplacianOperator,
    affine_relation_residual,
    basis_completeness,
    block_spectrum,
    classical_limit,
    closed_form_laplacian,
    commutation_witness,
    growth_scan,
    laplacian_matrix,
    load_block,
    spectrum,
    spectrum_rows,
    sphere_laplacian_residual,
    star_symmetry_residual,
)
from qhopf.bundles import spectral
from qhopf.coefficients import ONE, ZERO, ScalarQ
from qhopf.quantum_group import (
    ALPHA,
    ALPHA_STAR,
    GAMMA,
    GAMMA_STAR,
    ONE_ELEMENT,
    Monomial,
)

Q2 = ScalarQ.q_power(2)
X = GAMMA * GAMMA_STAR
SAMPLES = [ALPHA, ALPHA_STAR * GAMMA, ALPHA * X, GAMMA * GAMMA * GAMMA_STAR, X]


class TestBlocks(unittest.TestCase):

    def test_trivial_block(self):
        pairs = spectrum(laplacian_matrix(0, 0, "left"))
        self.assertEqual(len(pairs), 1, msg="n = 0, N = 0 block has one monomial")
        self.assertEqual(pairs[0].monomial, Monomial(0, 0, 0), msg="basis failed")
        self.assertEqual(pairs[0].eigenvalue, ZERO, msg="Δ(1) = 0 failed")

    def test_projector_eigenvector(self):
        expected = ONE_ELEMENT - X.scale(ONE + Q2)
        for side in ("left", "right"):
            pairs = spectrum(laplacian_matrix(0, 2, side))
            pair = next(p for p in pairs if p.monomial == Monomial(0, 1, 1))
            self.assertEqual(pair.eigenvector, expected, msg=f"{side} p(γγ*) failed")

    def test_structure(self):
        for side in ("left", "right"):
            for n in (-1, 0, 1):
                block = laplacian_matrix(n, 2, side)
                self.assertTrue(block.is_triangular(), msg=f"{side} n={n} not triangular")
                self.assertTrue(block.is_self_adjoint(), msg=f"{side} n={n} not self-adjoint")
                self.assertTrue(block.is_nonnegative(), msg=f"{side} n={n} negative")

    def test_buffer_keeps_interior(self):
        for side in ("left", "right"):
            plain = laplacian_matrix(1, 3, side, buffer=0)
            buffered = laplacian_matrix(1, 3, side, buffer=2)
            self.assertEqual(plain.matrix, buffered.matrix, msg=f"{side} buffer changed interior")

    def test_invalid_arguments(self):
        with self.assertRaises(ValueError):
            laplacian_matrix(0, -1, "left")
        with self.assertRaises(ValueError):
            laplacian_matrix(0, 1, "up")


class TestSpectrum(unittest.TestCase):

    def test_table_rows_match(self):
        for side in ("left", "right"):
            rows = set()
            for n in (-2, -1, 0, 1, 2):
                for pair in block_spectrum(n, 2, side, use_cache=False):
                    rows.add(pair.table.row)
                    self.assertTrue(pair.match, msg=(
                        f"{side} n={n} {pair.monomial.to_text()}: "
                        f"{pair.eigenvalue.to_text()} vs {pair.table.value.to_text()}"
                    ))
            self.assertTrue({8, 9} <= rows, msg=f"{side} λ rows were not reached")

    def test_eigenvectors(self):
        operator = LaplacianOperator("left")
        for pair in block_spectrum(1, 3, "left", use_cache=False):
            self.assertEqual(operator(pair.eigenvector), pair.eigenvector.scale(pair.eigenvalue),
                             msg=f"Δv = λv failed for {pair.monomial.to_text()}")

    def test_completeness(self):
        for n in (-1, 0, 2):
            self.assertTrue(basis_completeness(n, 3).complete, msg=f"rank deficient at n={n}")

    def test_rows_for_emitters(self):
        rows = spectrum_rows(block_spectrum(0, 1, "left", use_cache=False))
        self.assertEqual([r["monomial"] for r in rows],
                         ["alpha*^1 gamma^1", "1", "alpha^1 gamma*^1"], msg="row order failed")
        self.assertTrue(all(r["match"] for r in rows), msg="n = 0, N = 1 rows should match")

    def test_classical_limit(self):
        values = classical_limit(block_spectrum(1, 0, "right", use_cache=False))
        self.assertEqual(values, [0.5], msg="Δ_R α at q = 1 failed")

    def test_cached_block(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "block.pkl")
            with mock.patch.object(spectral, "_cache_path", return_value=path):
                first = load_block(0, 1, "right")
                self.assertTrue(os.path.exists(path), msg="block was not cached")
                second = load_block(0, 1, "right")
            self.assertEqual(first.matrix, second.matrix, msg="cached block differs")


class TestOperators(unittest.TestCase):

    def test_matches_closed_form(self):
        for side in ("left", "right"):
            operator = LaplacianOperator(side)
            for a in SAMPLES:
                self.assertEqual(operator(a), closed_form_laplacian(side, a),
                                 msg=f"{side} Laplacian of {a.to_text()} failed")

    def test_star_symmetry(self):
        for a in SAMPLES:
            self.assertTrue(star_symmetry_residual(a).is_zero(), msg=f"star symmetry failed on {a.to_text()}")

    def test_affine_relation(self):
        for a in SAMPLES:
            self.assertTrue(affine_relation_residual(a).is_zero(),
                            msg=f"affine relation failed on {a.to_text()}")

    def test_winding_zero_is_sphere_laplacian(self):
        for f in (X, ALPHA * GAMMA_STAR, ALPHA_STAR * GAMMA, X * X, ALPHA * GAMMA_STAR * X,
                  ONE_ELEMENT):
            self.assertTrue(sphere_laplacian_residual(f).is_zero(),
                            msg=f"Δ_L and Δ₀ disagree on {f.to_text()}")

    def test_laplacians_commute(self):
        for n in (-1, 0, 1):
            self.assertTrue(commutation_witness(n).commutes, msg=f"[Δ_L, Δ_R] != 0 at n={n}")

    def test_growth(self):
        report = growth_scan(1, 6)
        self.assertTrue(report.increasing, msg="row 5 family should grow with m")
        self.assertTrue(report.decomposition_ok, msg="row 5 rewrite failed")
        with self.assertRaises(ValueError):
            growth_scan(1, 1)


if __name__ == "__main__":
    unittest.main()
