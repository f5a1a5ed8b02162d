from enum import Enum
from functools import reduce
from typing import List, NamedTuple, Sequence, Union

import numpy as np

from ..errors import SynthesisError
from ..symplectic import SymplecticMatrix, bloch_messiah, is_symplectic
from ..utils import max_abs

EMBED_TOL = 1e-8
SQUEEZER_THRESHOLD = 1e-9


class StageKind(str, Enum):
    PASSIVE = "passive"
    SQUEEZER = "squeezer"
    SHEAR = "shear"
    CONTROLLED_Z = "controlled_z"


class Stage(NamedTuple):
    kind: StageKind
    matrix: np.ndarray


class SqueezerBudget(NamedTuple):
    count: int
    magnitudes: List[float]


def embedded_rows(m: int, k: int) -> List[int]:
    """Rows of a 2k decoder that carry D: positions 0..m-1 and momenta k..k+m-1."""
    return list(range(m)) + list(range(k, k + m))


def assemble(positions: Sequence[np.ndarray], momenta: Sequence[np.ndarray]) -> np.ndarray:
    """Stack position rows on top of momentum rows."""
    return np.vstack([np.atleast_2d(block) for block in positions if np.size(block)]
                     + [np.atleast_2d(block) for block in momenta if np.size(block)])


class FactoredDecoder:
    """A symplectic decoder on the party's 2k quadratures and its gate sequence.

    Args:
        stages (sequence of Stage): Gates in the order they act on the modes.
        D (ndarray): The 2m x 2k decoding matrix the decoder embeds.
        tol (float, optional): Tolerance of the symplecticity and embedding checks.
    """

    def __init__(self, stages: Sequence[Stage], D: np.ndarray, tol: float = EMBED_TOL):
        if not stages:
            raise SynthesisError("A decoder needs at least one stage")
        self.stages = tuple(stages)
        self.embeds = np.array(D, dtype=np.float64)
        self.embeds.setflags(write=False)
        # first stage acts first, so it sits rightmost in the product
        composed = reduce(lambda acc, stage: stage.matrix @ acc, self.stages[1:], self.stages[0].matrix)
        if not is_symplectic(composed, tol):
            raise SynthesisError("Composed decoder is not symplectic")
        self.composed = SymplecticMatrix(composed, tol=tol)
        error = self.embedding_error()
        if error > tol:
            raise SynthesisError(f"Decoder does not embed D: deviation {error:.3g}")

    @property
    def m(self) -> int:
        return self.embeds.shape[0] // 2

    @property
    def k(self) -> int:
        return self.composed.n

    def embedding_error(self) -> float:
        rows = self.composed.matrix[embedded_rows(self.m, self.k)]
        return max_abs(rows - self.embeds)

    def kinds(self) -> List[str]:
        return [stage.kind.value for stage in self.stages]

    def __repr__(self) -> str:
        return f"FactoredDecoder(k={self.k}, m={self.m}, stages={self.kinds()})"


def squeezer_budget(S: Union[SymplecticMatrix, np.ndarray], tol: float = 1e-9) -> SqueezerBudget:
    """Count the Bloch–Messiah squeezers of S with |r| above the noise floor."""
    factors = bloch_messiah(S, tol=tol)
    magnitudes = sorted((float(abs(r)) for r in factors.squeeze.r if abs(r) > SQUEEZER_THRESHOLD), reverse=True)
    return SqueezerBudget(count=len(magnitudes), magnitudes=magnitudes)


def factor_decoder(S: SymplecticMatrix, D: np.ndarray, tol: float = EMBED_TOL) -> FactoredDecoder:
    """Express a completion as passive, squeezer, passive stages."""
    factors = bloch_messiah(S, tol=tol)
    stages = [
        Stage(StageKind.PASSIVE, factors.right.matrix),
        Stage(StageKind.SQUEEZER, factors.squeeze.matrix),
        Stage(StageKind.PASSIVE, factors.left.matrix),
    ]
    return FactoredDecoder(stages, D, tol=tol)
