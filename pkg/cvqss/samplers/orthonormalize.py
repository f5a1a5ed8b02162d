import numpy as np
from scipy import linalg

from .base_sampler import BaseSampler


class OrthonormalizeSampler(BaseSampler):
    """QR of a complex Ginibre matrix with the phase fix that makes it Haar.

    The R factor's diagonal phases are moved into Q so the result does not depend
    on the sign convention of the QR routine.
    """

    def sample_unitary(self, n: int, rng: np.random.Generator) -> np.ndarray:
        ginibre = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
        q, r = linalg.qr(ginibre)
        diag = np.diag(r)
        phases = np.where(np.abs(diag) > 0, diag / np.abs(diag), 1.0)
        return q * phases[None, :]
