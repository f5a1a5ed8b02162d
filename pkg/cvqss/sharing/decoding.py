"""Decodability of a player subset and its decoding matrices.

Party A holds the rows of S_L at its q and p positions. Their coefficients split
into M (antisqueezed ancilla positions), N (squeezed ancilla momenta) and H (secret
quadratures). Any combination v with M^T v = 0 is free of antisqueezing noise; if
those combinations see all 2m secret quadratures through T = R H, then
D = pinv(T) R reads out the secret up to the noise B p^sqz with B = D N.
"""

from typing import NamedTuple, Optional

import numpy as np
from scipy import linalg

from ..errors import DecodabilityError
from ..utils import numerical_rank
from .scheme import PlayerSubset, SharingScheme

RANK_RTOL = 1e-8


class EncodingBlocks(NamedTuple):
    M: np.ndarray
    N: np.ndarray
    H: np.ndarray


class DecodingPlan(NamedTuple):
    subset: PlayerSubset
    blocks: EncodingBlocks
    kernel_basis: np.ndarray
    D: Optional[np.ndarray]
    B: Optional[np.ndarray]
    decodable: bool


class HomodyneSettings(NamedTuple):
    weights: np.ndarray
    angles: np.ndarray


def extract_blocks(scheme: SharingScheme, subset: PlayerSubset) -> EncodingBlocks:
    """Select party rows of S_L and split the columns into M, N and H.

    Input columns are ordered (q_sqz, q_s, p_sqz, p_s). Rows follow the party order
    (q_{a_1}..q_{a_k}, p_{a_1}..p_{a_k}).
    """
    subset.check(scheme)
    n, n_tot = scheme.n, scheme.n_tot
    positions = [a - 1 for a in subset]
    rows = scheme.matrix[positions + [n_tot + a for a in positions]]
    M = rows[:, :n]
    N = rows[:, n_tot:n_tot + n]
    H = np.hstack([rows[:, n:n_tot], rows[:, n_tot + n:]])
    return EncodingBlocks(M=M, N=N, H=H)


def kernel_basis(M: np.ndarray, tol: float = RANK_RTOL) -> np.ndarray:
    """Orthonormal rows spanning ker(M^T).

    Args:
        M (ndarray): 2k x n block.
        tol (float, optional): Singular values below tol * sigma_max count as zero.
    """
    if M.shape[0] == 0:
        return np.zeros((0, 0))
    return linalg.null_space(M.T, rcond=tol).T


def _is_decodable(blocks: EncodingBlocks, m: int, tol: float = RANK_RTOL) -> bool:
    rank_M = numerical_rank(blocks.M, tol)
    rank_MH = numerical_rank(np.hstack([blocks.M, blocks.H]), tol)
    return rank_MH == rank_M + 2 * m


def decodability(scheme: SharingScheme, subset: PlayerSubset) -> bool:
    """True iff rank([M | H]) = rank(M) + 2m."""
    return _is_decodable(extract_blocks(scheme, subset), scheme.m)


def decoding_plan(scheme: SharingScheme, subset: PlayerSubset) -> DecodingPlan:
    """D = pinv(R H) R and B = D N for a decodable party.

    With more than 2m kernel vectors the pseudo-inverse picks the minimum-norm left
    inverse; the result does not depend on the kernel basis.
    """
    blocks = extract_blocks(scheme, subset)
    R = kernel_basis(blocks.M)
    if not _is_decodable(blocks, scheme.m):
        return DecodingPlan(subset, blocks, R, None, None, False)
    D = np.linalg.pinv(R @ blocks.H) @ R
    return DecodingPlan(subset, blocks, R, D, D @ blocks.N, True)


def homodyne_settings(plan: DecodingPlan) -> HomodyneSettings:
    """Rotated-quadrature measurements reading out each decoded quadrature.

    Row j of D is sum_l alpha_jl (cos theta_jl q_l + sin theta_jl p_l), so player l
    measures the quadrature at angle theta_jl and the results are summed with
    weights alpha_jl.
    """
    if not plan.decodable:
        raise DecodabilityError(f"Party {plan.subset.label} cannot decode the secret")
    k = plan.subset.k
    q_part, p_part = plan.D[:, :k], plan.D[:, k:]
    return HomodyneSettings(weights=np.hypot(q_part, p_part), angles=np.arctan2(p_part, q_part))
