import numpy as np
import unittest
from unittest import mock

from hypothesis import given, settings, strategies as st

from cvqss.errors import ValidationError
from cvqss.fixtures import FIXTURES
from cvqss.samplers import OrthonormalizeSampler, make_rng, sample_haar
from cvqss.sharing import SharingScheme, decoding_plan
from cvqss.symplectic import (
    PassiveInterferometer,
    SqueezerProfile,
    bloch_messiah,
    controlled_z_matrix,
    is_orthogonal,
    is_symplectic,
    nearest_passive,
    omega,
    shear_matrix,
    squeezer_matrix,
    symplectic_basis,
    symplectic_eigenvalues,
    symplectic_form,
    symplectic_product,
    takagi,
    unitary_to_symplectic,
    williamson,
)
from cvqss.symplectic.decompositions import BlochMessiahFactors


def random_passive(n: int, rng: np.random.Generator) -> np.ndarray:
    unitary = OrthonormalizeSampler().sample_unitary(n, rng)
    return PassiveInterferometer.from_unitary(unitary).matrix


def random_symplectic(r: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    n = len(r)
    return random_passive(n, rng) @ SqueezerProfile(r).matrix @ random_passive(n, rng)


class TestSymplecticForm(unittest.TestCase):
    def test_single_mode(self):
        np.testing.assert_array_equal(symplectic_form(1).matrix, [[0, 1], [-1, 0]])

    def test_two_modes(self):
        J = symplectic_form(2).matrix
        np.testing.assert_array_equal(J[:2, 2:], np.eye(2))
        np.testing.assert_array_equal(J[2:, :2], -np.eye(2))
        np.testing.assert_array_equal(J[:2, :2], np.zeros((2, 2)))

    def test_square_is_minus_identity(self):
        for n in range(1, 7):
            J = symplectic_form(n).matrix
            np.testing.assert_array_equal(J @ J, -np.eye(2 * n))
            np.testing.assert_array_equal(J, -J.T)

    def test_rejects_zero_modes(self):
        with self.assertRaises(ValidationError):
            symplectic_form(0)

    def test_read_only(self):
        with self.assertRaises(ValueError):
            symplectic_form(2).matrix[0, 0] = 1.0


class TestSymplecticProduct(unittest.TestCase):
    def test_conjugate_pair(self):
        self.assertEqual(symplectic_product([1, 0, 0, 0], [0, 0, 1, 0]), 1.0)

    def test_self_product(self):
        x = np.array([0.3, -1.2, 4.0, 2.5])
        self.assertEqual(symplectic_product(x, x), 0.0)

    def test_brute_force(self):
        x = np.array([1.0, 2.0, 3.0, 4.0])
        y = np.array([4.0, 3.0, 2.0, 1.0])
        self.assertAlmostEqual(symplectic_product(x, y), x @ omega(2) @ y)

    def test_bad_lengths(self):
        with self.assertRaises(ValidationError):
            symplectic_product([1, 2], [1, 2, 3, 4])
        with self.assertRaises(ValidationError):
            symplectic_product([1, 2, 3], [1, 2, 3])

    @settings(deadline=None)
    @given(
        st.lists(st.floats(-10, 10, allow_nan=False), min_size=6, max_size=6),
        st.lists(st.floats(-10, 10, allow_nan=False), min_size=6, max_size=6),
    )
    def test_antisymmetry(self, x, y):
        self.assertAlmostEqual(symplectic_product(x, y), -symplectic_product(y, x))


class TestPassiveInterferometer(unittest.TestCase):
    def setUp(self):
        self.good = FIXTURES["m1n2good"]

    def test_identity(self):
        passive = unitary_to_symplectic(np.eye(3))
        np.testing.assert_array_equal(passive.X, np.eye(3))
        np.testing.assert_array_equal(passive.Y, np.zeros((3, 3)))
        np.testing.assert_array_equal(passive.matrix, np.eye(6))

    def test_phase(self):
        passive = unitary_to_symplectic(1j * np.eye(2))
        np.testing.assert_array_equal(passive.X, np.zeros((2, 2)))
        np.testing.assert_array_equal(passive.Y, np.eye(2))
        self.assertTrue(is_orthogonal(passive.matrix))
        self.assertTrue(is_symplectic(passive.matrix))

    def test_printed_fixture(self):
        passive = PassiveInterferometer(self.good.X, self.good.Y, tol=5e-6)
        self.assertEqual(passive.X[0, 0], 0.596667)
        self.assertEqual(passive.Y[0, 0], -0.0698255)
        self.assertLessEqual(passive.unitarity_error(), 5e-6)

    def test_printed_fixture_fails_default_tolerance(self):
        with self.assertRaises(ValidationError):
            PassiveInterferometer(self.good.X, self.good.Y)

    def test_rejects_non_unitary(self):
        with self.assertRaises(ValidationError):
            unitary_to_symplectic(2 * np.eye(2))

    def test_rejects_nan(self):
        with self.assertRaises(ValidationError):
            PassiveInterferometer(np.full((3, 3), np.nan), np.zeros((3, 3)))
        Y = np.zeros((2, 2))
        Y[0, 1] = np.inf
        with self.assertRaises(ValidationError):
            PassiveInterferometer(np.eye(2), Y, tol=1.0)

    def test_projection(self):
        projected = nearest_passive(self.good.X, self.good.Y)
        self.assertLessEqual(projected.unitarity_error(), 1e-12)
        np.testing.assert_allclose(projected.X, self.good.X, atol=5e-6)
        np.testing.assert_allclose(projected.Y, self.good.Y, atol=5e-6)

    def test_from_matrix(self):
        rng = make_rng(3)
        matrix = random_passive(4, rng)
        passive = PassiveInterferometer.from_matrix(matrix)
        np.testing.assert_allclose(passive.matrix, matrix, atol=1e-14)
        with self.assertRaises(ValidationError):
            PassiveInterferometer.from_matrix(SqueezerProfile([0.2, 0.1]).matrix)

    def test_sampled_is_orthogonal_symplectic(self):
        rng = make_rng(11)
        for n in range(1, 7):
            matrix = random_passive(n, rng)
            self.assertTrue(is_orthogonal(matrix, 1e-10))
            self.assertTrue(is_symplectic(matrix, 1e-10))


class TestIsSymplectic(unittest.TestCase):
    def test_identity(self):
        self.assertTrue(is_symplectic(np.eye(4)))

    def test_scaling(self):
        self.assertFalse(is_symplectic(2 * np.eye(4)))

    def test_squeezer(self):
        self.assertTrue(is_symplectic(SqueezerProfile([0.5]).matrix))

    def test_odd_dimension(self):
        with self.assertRaises(ValidationError):
            is_symplectic(np.eye(3))


class TestGates(unittest.TestCase):
    def test_squeezer_matrix(self):
        np.testing.assert_array_equal(squeezer_matrix(SqueezerProfile([0.0])).matrix, np.eye(2))
        np.testing.assert_allclose(
            squeezer_matrix(SqueezerProfile([np.log(2)])).matrix, np.diag([2.0, 0.5])
        )

    def test_squeezer_always_symplectic(self):
        rng = make_rng(5)
        for _ in range(20):
            profile = SqueezerProfile(rng.uniform(-2, 2, 3))
            self.assertTrue(is_symplectic(squeezer_matrix(profile).matrix))

    def test_shear_and_controlled_z_exact(self):
        shear = shear_matrix([[0.7, -1.3], [-1.3, 2.0]])
        self.assertTrue(is_symplectic(shear, tol=1e-15))
        cz = controlled_z_matrix(3, 0, 2, 1.7)
        self.assertTrue(is_symplectic(cz, tol=1e-15))
        self.assertEqual(cz[3, 2], 1.7)
        self.assertEqual(cz[5, 0], 1.7)

    def test_gate_validation(self):
        with self.assertRaises(ValidationError):
            shear_matrix([[0.0, 1.0], [2.0, 0.0]])
        with self.assertRaises(ValidationError):
            controlled_z_matrix(2, 1, 1, 0.5)


class TestSymplecticBasis(unittest.TestCase):
    def test_random_subspace(self):
        rng = make_rng(8)
        rows = rng.standard_normal((4, 6))
        E, F = symplectic_basis(rows)
        J = omega(3)
        np.testing.assert_allclose(E @ J @ F.T, np.eye(2), atol=1e-9)
        np.testing.assert_allclose(E @ J @ E.T, np.zeros((2, 2)), atol=1e-9)
        np.testing.assert_allclose(F @ J @ F.T, np.zeros((2, 2)), atol=1e-9)
        # same span
        stacked = np.vstack([rows, E, F])
        self.assertEqual(np.linalg.matrix_rank(stacked), 4)

    def test_isotropic_subspace(self):
        with self.assertRaises(ValidationError):
            symplectic_basis(np.eye(4)[:2])

    def test_odd_rows(self):
        with self.assertRaises(ValidationError):
            symplectic_basis(np.eye(4)[:3])


class TestTakagi(unittest.TestCase):
    def test_complex_symmetric(self):
        rng = make_rng(4)
        A = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        A = A + A.T
        s, U = takagi(A)
        np.testing.assert_allclose(U @ np.diag(s) @ U.T, A, atol=1e-10)
        np.testing.assert_allclose(U.conj().T @ U, np.eye(4), atol=1e-10)
        self.assertTrue(np.all(np.diff(s) <= 0))

    def test_real_indefinite(self):
        A = np.diag([1.0, -2.0])
        s, U = takagi(A)
        np.testing.assert_allclose(s, [2.0, 1.0])
        np.testing.assert_allclose(U @ np.diag(s) @ U.T, A, atol=1e-14)


class TestBlochMessiah(unittest.TestCase):
    def setUp(self):
        self.rng = make_rng(2021)

    def test_passive(self):
        factors = bloch_messiah(random_passive(3, self.rng))
        np.testing.assert_allclose(factors.squeeze.r, np.zeros(3), atol=1e-9)

    def test_diagonal_squeezer(self):
        r = np.array([0.3, -0.8, 0.1])
        factors = bloch_messiah(SqueezerProfile(r).matrix)
        np.testing.assert_allclose(np.sort(factors.squeeze.r), np.sort(np.abs(r)), atol=1e-12)

    def test_known_squeezing(self):
        S = random_symplectic(np.array([0.3, 0.7]), self.rng)
        factors = bloch_messiah(S)
        np.testing.assert_allclose(np.sort(factors.squeeze.r), [0.3, 0.7], atol=1e-9)
        self.assertTrue(np.all(factors.squeeze.r >= 0))

    def test_round_trip(self):
        for _ in range(100):
            n = int(self.rng.integers(1, 7))
            S = random_symplectic(self.rng.uniform(-1, 1, n), self.rng)
            factors = bloch_messiah(S)
            self.assertTrue(np.all(factors.squeeze.r >= 0))
            np.testing.assert_allclose(factors.reconstruct(), S, atol=1e-8)

    def test_rejects_non_symplectic(self):
        with self.assertRaises(ValidationError):
            bloch_messiah(2 * np.eye(4))

    def test_rejects_bad_reconstruction(self):
        S = random_symplectic(np.array([0.4, 0.2]), self.rng)
        with mock.patch.object(BlochMessiahFactors, "reconstruct", return_value=np.zeros((4, 4))):
            with self.assertRaises(ValidationError):
                bloch_messiah(S)


class TestWilliamson(unittest.TestCase):
    def setUp(self):
        self.rng = make_rng(17)

    def reconstruct(self, S_w, nu):
        return S_w.matrix @ np.diag(np.concatenate([nu, nu])) @ S_w.matrix.T

    def test_identity(self):
        S_w, nu = williamson(np.eye(4))
        np.testing.assert_allclose(nu, np.ones(2), atol=1e-12)
        self.assertTrue(is_orthogonal(S_w.matrix, 1e-9))

    def test_pure_squeezed(self):
        _, nu = williamson(np.diag([3.0, 1 / 3.0]))
        np.testing.assert_allclose(nu, [1.0], atol=1e-12)

    def test_diagonal(self):
        g = np.array([2.0, 0.5, 4.0, 3.0, 1.5, 1.0])
        S_w, nu = williamson(np.diag(g))
        expected = np.sort(np.sqrt(g[:3] * g[3:]))[::-1]
        np.testing.assert_allclose(nu, expected, rtol=1e-12)
        np.testing.assert_allclose(self.reconstruct(S_w, nu), np.diag(g), atol=1e-8)

    def test_random(self):
        for n in range(1, 5):
            A = self.rng.standard_normal((2 * n, 2 * n))
            G = A @ A.T + np.eye(2 * n)
            S_w, nu = williamson(G)
            self.assertTrue(is_symplectic(S_w.matrix, 1e-8))
            self.assertTrue(np.all(np.diff(nu) <= 1e-12))
            np.testing.assert_allclose(self.reconstruct(S_w, nu), G, atol=1e-8)

    def test_decoder_gram(self):
        for n, m, seed in ((2, 1, 4), (4, 1, 9), (2, 2, 31)):
            scheme = SharingScheme(n, m, sample_haar(n + m, seed))
            plans = [decoding_plan(scheme, party) for party in scheme.threshold_subsets()]
            plans = [plan for plan in plans if plan.decodable]
            self.assertTrue(plans)
            for plan in plans:
                G = plan.D @ plan.D.T
                _, nu = williamson(G)
                self.assertEqual(len(nu), m)
                self.assertTrue(np.all(nu >= 1 - 1e-9))
            np.testing.assert_allclose(nu, symplectic_eigenvalues(G), rtol=1e-8)

    def test_rejects_indefinite(self):
        with self.assertRaises(ValidationError):
            williamson(-np.eye(2))
        with self.assertRaises(ValidationError):
            williamson(np.array([[1.0, 0.5], [0.0, 1.0]]))


if __name__ == "__main__":
    unittest.main()
