from argparse import ArgumentParser, Namespace
from abc import ABC, abstractmethod

import numpy as np

from ..errors import ValidationError
from ..symplectic import PassiveInterferometer

# Unitarity tolerance every sampled interferometer must meet.
SAMPLE_TOL = 1e-10


def make_rng(seed: int) -> np.random.Generator:
    """The project's portable 64-bit generator: PCG64 seeded with an unsigned int."""
    seed = int(seed)
    if not 0 <= seed < 2 ** 64:
        raise ValidationError(f"Seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))


class BaseSampler(ABC):
    """Base class for Haar samplers of passive interferometers.

    Subclasses implement `sample_unitary`; `sample` turns a seed into a validated
    PassiveInterferometer so the same (seed, method, n) always gives the same bits.
    """

    @abstractmethod
    def sample_unitary(self, n: int, rng: np.random.Generator) -> np.ndarray:
        raise NotImplementedError

    def sample(self, n: int, seed: int) -> PassiveInterferometer:
        if n < 1:
            raise ValidationError(f"Mode count must be positive, got {n}")
        unitary = self.sample_unitary(n, make_rng(seed))
        return PassiveInterferometer.from_unitary(unitary, tol=SAMPLE_TOL)

    @classmethod
    def from_args(cls, args: Namespace) -> "BaseSampler":
        return cls()

    @staticmethod
    def add_args(parser: ArgumentParser) -> ArgumentParser:
        return parser
