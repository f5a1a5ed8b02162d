"""Euler-angle parametrization of U(n).

Every unitary is e^{i eta} E_1 E_2 ... E_{n-1}, where E_l is a product of
elementary two-mode rotations E^{(j, l+1)}. The angles are n(n-1)/2 values
phi_jk, as many psi_jk, n-1 values chi_l and one global phase eta.
"""

from argparse import ArgumentParser, Namespace
from functools import lru_cache
from math import factorial
from typing import List, Sequence, Tuple

import numpy as np
from scipy.integrate import cumulative_trapezoid

from ..errors import ValidationError
from .base_sampler import BaseSampler

GRID_POINTS = 2 ** 14
TWO_PI = 2 * np.pi
MARGINALS = ("hurwitz", "as_written")


def angle_pairs(n: int) -> List[Tuple[int, int]]:
    """1-based (j, k) pairs in the order the rotations are composed."""
    return [(j, k) for k in range(2, n + 1) for j in range(1, k)]


class EulerAngles:
    """The n^2 real parameters of a unitary.

    Args:
        n (int): Matrix size.
        phi (sequence): phi_jk in [0, pi/2), ordered like `angle_pairs(n)`.
        psi (sequence): psi_jk in [0, 2 pi), same order.
        chi (sequence): chi_l in [0, 2 pi) for l = 1..n-1.
        eta (float): Global phase in [0, 2 pi).
    """

    def __init__(self, n: int, phi: Sequence[float], psi: Sequence[float], chi: Sequence[float], eta: float):
        if n < 1:
            raise ValidationError(f"Matrix size must be positive, got {n}")
        npairs = n * (n - 1) // 2
        phi = np.asarray(phi, dtype=np.float64).reshape(-1)
        psi = np.asarray(psi, dtype=np.float64).reshape(-1)
        chi = np.asarray(chi, dtype=np.float64).reshape(-1)
        if phi.size != npairs or psi.size != npairs or chi.size != n - 1:
            raise ValidationError(
                f"n={n} needs {npairs} phi, {npairs} psi and {n - 1} chi values, "
                f"got {phi.size}, {psi.size} and {chi.size}"
            )
        if np.any(phi < 0) or np.any(phi >= np.pi / 2):
            raise ValidationError("phi values must lie in [0, pi/2)")
        for name, values in (("psi", psi), ("chi", chi), ("eta", np.array([eta]))):
            if np.any(values < 0) or np.any(values >= TWO_PI):
                raise ValidationError(f"{name} values must lie in [0, 2 pi)")
        for values in (phi, psi, chi):
            values.setflags(write=False)
        self.n = n
        self.phi, self.psi, self.chi, self.eta = phi, psi, chi, float(eta)

    @classmethod
    def zeros(cls, n: int) -> "EulerAngles":
        npairs = n * (n - 1) // 2
        return cls(n, np.zeros(npairs), np.zeros(npairs), np.zeros(n - 1), 0.0)

    def pair_index(self, j: int, k: int) -> int:
        return angle_pairs(self.n).index((j, k))

    def __len__(self) -> int:
        return self.n * self.n


def elementary_rotation(n: int, j: int, k: int, phi: float, psi: float, chi: float) -> np.ndarray:
    """E^{(j,k)}: identity except on the (j, k) plane (1-based, j < k)."""
    if not 1 <= j < k <= n:
        raise ValidationError(f"Need 1 <= j < k <= n, got j={j}, k={k}, n={n}")
    rotation = np.eye(n, dtype=np.complex128)
    c, s = np.cos(phi), np.sin(phi)
    rotation[j - 1, j - 1] = c * np.exp(1j * psi)
    rotation[j - 1, k - 1] = s * np.exp(1j * chi)
    rotation[k - 1, j - 1] = -s * np.exp(-1j * chi)
    rotation[k - 1, k - 1] = c * np.exp(-1j * psi)
    return rotation


def compose_from_angles(angles: EulerAngles) -> np.ndarray:
    """Build e^{i eta} E_1 ... E_{n-1} from its angles."""
    n = angles.n
    unitary = np.eye(n, dtype=np.complex128)
    for l in range(1, n):
        k = l + 1
        composite = np.eye(n, dtype=np.complex128)
        # E_l = E^{(l,k)} E^{(l-1,k)} ... E^{(1,k)}; only E^{(1,k)} carries chi_l
        for j in range(l, 0, -1):
            idx = angles.pair_index(j, k)
            chi = angles.chi[l - 1] if j == 1 else 0.0
            composite = composite @ elementary_rotation(n, j, k, angles.phi[idx], angles.psi[idx], chi)
        unitary = unitary @ composite
    return np.exp(1j * angles.eta) * unitary


def _sphere_volumes(n: int) -> float:
    # Vol(S^{2k-1}) = 2 pi^k / (k-1)!
    return float(np.prod([2 * np.pi ** k / factorial(k - 1) for k in range(1, n + 1)]))


def haar_density(angles: EulerAngles) -> float:
    """Density prod sin^{2j-1}(phi_jk) / prod_k Vol(S^{2k-1})."""
    weight = 1.0
    for (j, _), phi in zip(angle_pairs(angles.n), angles.phi):
        weight *= np.sin(phi) ** (2 * j - 1)
    return weight / _sphere_volumes(angles.n)


def hurwitz_density(angles: EulerAngles) -> float:
    """Haar density with the cosine factor, normalized over the angle box."""
    weight = 1.0
    for (j, _), phi in zip(angle_pairs(angles.n), angles.phi):
        weight *= 2 * j * np.sin(phi) ** (2 * j - 1) * np.cos(phi)
    n = angles.n
    return weight / TWO_PI ** (n * (n - 1) // 2 + n)


@lru_cache(maxsize=None)
def _inverse_cdf_table(j: int, marginal: str) -> Tuple[np.ndarray, np.ndarray]:
    grid = np.linspace(0.0, np.pi / 2, GRID_POINTS)
    density = np.sin(grid) ** (2 * j - 1)
    if marginal == "hurwitz":
        density = density * np.cos(grid)
    cdf = cumulative_trapezoid(density, grid, initial=0.0)
    cdf /= cdf[-1]
    grid.setflags(write=False)
    cdf.setflags(write=False)
    return grid, cdf


def sample_phi(j: int, uniform: np.ndarray, marginal: str = "hurwitz") -> np.ndarray:
    """Inverse-CDF draw of phi_jk from uniform variates, linear interpolation."""
    if marginal not in MARGINALS:
        raise KeyError(f"Unrecognized angle marginal {marginal}")
    grid, cdf = _inverse_cdf_table(j, marginal)
    phi = np.interp(uniform, cdf, grid)
    return np.minimum(phi, np.nextafter(np.pi / 2, 0.0))


def sample_angles(n: int, rng: np.random.Generator, marginal: str = "hurwitz") -> EulerAngles:
    pairs = angle_pairs(n)
    uniform = rng.random(len(pairs))
    phi = np.array([sample_phi(j, u, marginal) for (j, _), u in zip(pairs, uniform)])
    psi = rng.uniform(0.0, TWO_PI, len(pairs))
    chi = rng.uniform(0.0, TWO_PI, n - 1)
    eta = rng.uniform(0.0, TWO_PI)
    return EulerAngles(n, phi, psi, chi, eta)


class EulerSampler(BaseSampler):
    """Haar sampling through random Euler angles.

    Args:
        marginal (str, optional): "hurwitz" draws phi_jk with density proportional to
            sin^{2j-1} cos; "as_written" drops the cosine, matching `haar_density`.
    """

    def __init__(self, marginal: str = "hurwitz"):
        if marginal not in MARGINALS:
            raise KeyError(f"Unrecognized angle marginal {marginal}")
        self.marginal = marginal

    def sample_unitary(self, n: int, rng: np.random.Generator) -> np.ndarray:
        return compose_from_angles(sample_angles(n, rng, self.marginal))

    @classmethod
    def from_args(cls, args: Namespace) -> "EulerSampler":
        return cls(marginal=getattr(args, "euler_marginal", "hurwitz"))

    @staticmethod
    def add_args(parser: ArgumentParser) -> ArgumentParser:
        parser.add_argument(
            "--euler-marginal",
            dest="euler_marginal",
            choices=MARGINALS,
            default="hurwitz",
            help="Distribution of the phi angles for the euler sampler.",
        )
        return parser
