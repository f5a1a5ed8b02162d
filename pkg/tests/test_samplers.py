import numpy as np
import unittest

from scipy import integrate, stats

from cvqss import samplers
from cvqss.errors import ValidationError
from cvqss.samplers import (
    EulerAngles,
    EulerSampler,
    OrthonormalizeSampler,
    angle_pairs,
    compose_from_angles,
    elementary_rotation,
    haar_density,
    hurwitz_density,
    make_rng,
    sample_angles,
    sample_batch,
    sample_haar,
)
from cvqss.utils import child_seed


def first_entry_weights(method: str, n: int, count: int, seed: int, marginal: str = "hurwitz"):
    sampler = EulerSampler(marginal) if method == "euler" else OrthonormalizeSampler()
    rng = make_rng(seed)
    return np.array([abs(sampler.sample_unitary(n, rng)[0, 0]) ** 2 for _ in range(count)])


class TestRng(unittest.TestCase):
    def test_deterministic(self):
        np.testing.assert_array_equal(make_rng(42).random(5), make_rng(42).random(5))

    def test_seed_range(self):
        make_rng(2 ** 64 - 1)
        with self.assertRaises(ValidationError):
            make_rng(-1)
        with self.assertRaises(ValidationError):
            make_rng(2 ** 64)

    def test_child_seed(self):
        self.assertEqual(child_seed(12, 5), 12 ^ 5)
        self.assertEqual(child_seed(2 ** 64 - 1, 1), 2 ** 64 - 2)


class TestEulerAngles(unittest.TestCase):
    def test_pair_order(self):
        self.assertListEqual(angle_pairs(3), [(1, 2), (1, 3), (2, 3)])

    def test_counts(self):
        angles = EulerAngles.zeros(4)
        self.assertEqual(len(angles), 16)
        self.assertEqual(angles.phi.size, 6)
        self.assertEqual(angles.chi.size, 3)

    def test_validation(self):
        with self.assertRaises(ValidationError):
            EulerAngles(2, [0.1, 0.2], [0.0], [0.0], 0.0)
        with self.assertRaises(ValidationError):
            EulerAngles(2, [np.pi / 2], [0.0], [0.0], 0.0)
        with self.assertRaises(ValidationError):
            EulerAngles(2, [0.1], [0.0], [0.0], 2 * np.pi)


class TestElementaryRotation(unittest.TestCase):
    def test_zero_angles(self):
        np.testing.assert_array_equal(elementary_rotation(3, 1, 3, 0.0, 0.0, 0.0), np.eye(3))

    def test_quarter_turn(self):
        rotation = elementary_rotation(2, 1, 2, np.pi / 2 - 1e-9, 0.0, 0.0)
        np.testing.assert_allclose(rotation, [[0, 1], [-1, 0]], atol=1e-8)

    def test_unitary(self):
        rng = make_rng(1)
        for _ in range(20):
            phi, psi, chi = rng.uniform(0, np.pi / 2), rng.uniform(0, 2 * np.pi), rng.uniform(0, 2 * np.pi)
            rotation = elementary_rotation(4, 2, 4, phi, psi, chi)
            np.testing.assert_allclose(rotation @ rotation.conj().T, np.eye(4), atol=1e-12)

    def test_bad_indices(self):
        with self.assertRaises(ValidationError):
            elementary_rotation(3, 2, 2, 0.1, 0.0, 0.0)
        with self.assertRaises(ValidationError):
            elementary_rotation(3, 1, 4, 0.1, 0.0, 0.0)


class TestComposeFromAngles(unittest.TestCase):
    def test_zero_angles(self):
        np.testing.assert_array_equal(compose_from_angles(EulerAngles.zeros(4)), np.eye(4))

    def test_single_mode(self):
        unitary = compose_from_angles(EulerAngles(1, [], [], [], 1.2))
        np.testing.assert_allclose(unitary, [[np.exp(1.2j)]])

    def test_two_modes(self):
        angles = EulerAngles(2, [0.4], [1.0], [2.0], 0.5)
        expected = np.exp(0.5j) * elementary_rotation(2, 1, 2, 0.4, 1.0, 2.0)
        np.testing.assert_allclose(compose_from_angles(angles), expected)

    def test_three_modes_unitary(self):
        angles = sample_angles(3, make_rng(9))
        unitary = compose_from_angles(angles)
        np.testing.assert_allclose(unitary.conj().T @ unitary, np.eye(3), atol=1e-12)


class TestDensities(unittest.TestCase):
    def test_vanishing_angle(self):
        self.assertEqual(haar_density(EulerAngles(2, [0.0], [1.0], [1.0], 1.0)), 0.0)

    def test_single_mode(self):
        self.assertAlmostEqual(haar_density(EulerAngles.zeros(1)), 1 / (2 * np.pi))

    def test_two_modes(self):
        density = haar_density(EulerAngles(2, [np.pi / 4], [0.0], [0.0], 0.0))
        expected = np.sin(np.pi / 4) / (2 * np.pi * 2 * np.pi ** 2)
        self.assertAlmostEqual(density, expected)

    def test_hurwitz_normalized(self):
        def density(phi):
            return hurwitz_density(EulerAngles(2, [phi], [0.0], [0.0], 0.0))

        total, _ = integrate.quad(density, 0, np.pi / 2)
        self.assertAlmostEqual(total * (2 * np.pi) ** 3, 1.0, places=8)


class TestSampleHaar(unittest.TestCase):
    def setUp(self):
        self.methods = list(samplers.SAMPLERS)

    def test_single_mode_phase(self):
        for method in self.methods:
            passive = sample_haar(1, 3, method)
            self.assertAlmostEqual(passive.X[0, 0] ** 2 + passive.Y[0, 0] ** 2, 1.0)

    def test_deterministic(self):
        for method in self.methods:
            first, second = sample_haar(4, 123, method), sample_haar(4, 123, method)
            np.testing.assert_array_equal(first.X, second.X)
            np.testing.assert_array_equal(first.Y, second.Y)
            self.assertFalse(np.array_equal(first.X, sample_haar(4, 124, method).X))

    def test_unitary(self):
        for method in self.methods:
            for seed in range(20):
                passive = sample_haar(5, seed, method)
                self.assertLessEqual(passive.unitarity_error(), 1e-10)

    def test_unknown_method(self):
        with self.assertRaises(KeyError):
            sample_haar(2, 0, "qr")
        with self.assertRaises(KeyError):
            EulerSampler("cosine")

    def test_batch_matches_single(self):
        batch = sample_batch(3, 77, 5)
        for i, passive in enumerate(batch):
            np.testing.assert_array_equal(passive.X, sample_haar(3, child_seed(77, i)).X)

    def test_batch_worker_independent(self):
        serial = sample_batch(3, 5, 40, "euler", workers=1)
        threaded = sample_batch(3, 5, 40, "euler", workers=4)
        for first, second in zip(serial, threaded):
            self.assertEqual(first, second)


class TestHaarStatistics(unittest.TestCase):
    """|U_11|^2 of a Haar unitary is Beta(1, n - 1)."""

    def setUp(self):
        self.n = 3
        self.count = 10 ** 4
        self.weights = {
            method: first_entry_weights(method, self.n, self.count, seed)
            for method, seed in (("euler", 101), ("orthonormalize", 202))
        }

    def test_beta_marginal(self):
        for method, weights in self.weights.items():
            result = stats.kstest(weights, stats.beta(1, self.n - 1).cdf)
            self.assertGreater(result.pvalue, 0.01, method)

    def test_methods_agree(self):
        result = stats.ks_2samp(self.weights["euler"], self.weights["orthonormalize"])
        self.assertGreater(result.pvalue, 0.01)

    def test_second_moments(self):
        for method in self.weights:
            sampler = samplers.get(method)()
            rng = make_rng(303)
            squares = np.array(
                [np.abs(sampler.sample_unitary(self.n, rng)) ** 2 for _ in range(self.count)]
            )
            mean = squares.mean(0)
            stderr = squares.std(0, ddof=1) / np.sqrt(self.count)
            self.assertTrue(np.all(np.abs(mean - 1 / self.n) <= 5 * stderr), method)

    def test_density_without_cosine_is_not_haar(self):
        # n = 2: |U_11|^2 = cos^2(phi) is uniform under Haar
        weights = first_entry_weights("euler", 2, self.count, 404, marginal="as_written")
        self.assertLess(stats.kstest(weights, stats.uniform.cdf).pvalue, 1e-6)
        hurwitz = first_entry_weights("euler", 2, self.count, 404)
        self.assertGreater(stats.kstest(hurwitz, stats.uniform.cdf).pvalue, 0.01)


if __name__ == "__main__":
    unittest.main()
