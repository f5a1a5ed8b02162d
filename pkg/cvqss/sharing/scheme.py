from itertools import combinations
from math import ceil
from typing import Iterable, Iterator, List, Sequence, Union

import numpy as np

from ..errors import ValidationError
from ..symplectic import PassiveInterferometer


def threshold(n: int, m: int) -> int:
    """Minimum access-party size m + ceil(n/2)."""
    return m + ceil(n / 2)


def ramp_bound(n: int, m: int) -> int:
    """Largest party size that recovers nothing, threshold - m."""
    return threshold(n, m) - m


class SharingScheme:
    """The dealer's public encoding.

    Input modes 1..n are momentum-squeezed ancillas and n+1..n+m carry the secret.
    The interferometer mixes all n + m modes and output mode i goes to player i.

    Args:
        n (int): Number of ancilla modes.
        m (int): Number of secret modes.
        interferometer (PassiveInterferometer): Network on n + m modes.
    """

    def __init__(self, n: int, m: int, interferometer: PassiveInterferometer):
        if n < 1 or m < 1:
            raise ValidationError(f"Need n >= 1 and m >= 1, got n={n}, m={m}")
        if interferometer.n_tot != n + m:
            raise ValidationError(
                f"Interferometer acts on {interferometer.n_tot} modes, expected n + m = {n + m}"
            )
        self.n = n
        self.m = m
        self.interferometer = interferometer
        self._matrix = interferometer.matrix
        self._matrix.setflags(write=False)

    @property
    def n_tot(self) -> int:
        return self.n + self.m

    @property
    def matrix(self) -> np.ndarray:
        """The 2(n+m) x 2(n+m) encoding S_L."""
        return self._matrix

    @property
    def threshold(self) -> int:
        return threshold(self.n, self.m)

    def threshold_subsets(self) -> List["PlayerSubset"]:
        return list(PlayerSubset.all(self.n_tot, sizes=[self.threshold]))

    def __repr__(self) -> str:
        return f"SharingScheme(n={self.n}, m={self.m})"


class PlayerSubset:
    """A set of players, identified by 1-based output-mode indices.

    Args:
        indices (iterable of int): Distinct positive indices, in any order.
        n_tot (int, optional): When given, indices must not exceed it.
    """

    def __init__(self, indices: Iterable[int], n_tot: Union[int, None] = None):
        indices = [int(i) for i in indices]
        if len(set(indices)) != len(indices):
            raise ValidationError(f"Player subset has repeated indices: {indices}")
        if any(i < 1 for i in indices):
            raise ValidationError(f"Player indices start at 1, got {indices}")
        if n_tot is not None and any(i > n_tot for i in indices):
            raise ValidationError(f"Player indices must be at most {n_tot}, got {indices}")
        self.indices = tuple(sorted(indices))

    @classmethod
    def parse(cls, text: str, n_tot: Union[int, None] = None) -> "PlayerSubset":
        """Parse "1,2,4"."""
        try:
            indices = [int(part) for part in text.split(",") if part.strip()]
        except ValueError:
            raise ValidationError(f"Cannot parse player subset {text!r}")
        return cls(indices, n_tot)

    @classmethod
    def all(cls, n_tot: int, sizes: Union[Sequence[int], None] = None) -> Iterator["PlayerSubset"]:
        """Nonempty subsets ordered by size, then lexicographically."""
        sizes = range(1, n_tot + 1) if sizes is None else sizes
        for size in sizes:
            for indices in combinations(range(1, n_tot + 1), size):
                yield cls(indices)

    @property
    def k(self) -> int:
        return len(self.indices)

    @property
    def label(self) -> str:
        return "-".join(str(i) for i in self.indices)

    def check(self, scheme: SharingScheme) -> None:
        if self.indices and self.indices[-1] > scheme.n_tot:
            raise ValidationError(
                f"Player {self.indices[-1]} does not exist in a {scheme.n_tot}-mode scheme"
            )

    def __len__(self) -> int:
        return self.k

    def __iter__(self):
        return iter(self.indices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlayerSubset):
            return NotImplemented
        return self.indices == other.indices

    def __hash__(self) -> int:
        return hash(self.indices)

    def __repr__(self) -> str:
        return f"PlayerSubset({list(self.indices)})"
