"""Contains matrix helpers shared by the linear-algebra modules."""

from typing import Union

import numpy as np
import torch


def symmetrize_matrix(inp: torch.Tensor) -> torch.Tensor:
    """Symmetrize matrix in additive fashion.

    Symmetrizes A with (A + A.T)/2 along the last two axes.

    Args:
        inp (tensor): Matrix (or batch of matrices) to symmetrize.
    """
    return 0.5 * (inp + inp.transpose(-1, -2))


def symmetrize_array(inp: np.ndarray) -> np.ndarray:
    """Numpy counterpart of symmetrize_matrix."""
    return 0.5 * (inp + np.swapaxes(inp, -1, -2))


def max_abs(inp: Union[np.ndarray, torch.Tensor]) -> float:
    """Largest absolute entry, 0 for empty input."""
    if isinstance(inp, torch.Tensor):
        inp = inp.detach().cpu().numpy()
    if inp.size == 0:
        return 0.0
    return float(np.max(np.abs(inp)))


def numerical_rank(inp: np.ndarray, rtol: float = 1e-8) -> int:
    """Rank from singular values above rtol * sigma_max.

    Args:
        inp (ndarray): Matrix of any shape, possibly with a zero dimension.
        rtol (float, optional): Threshold relative to the largest singular value.
    """
    if inp.size == 0:
        return 0
    sigma = np.linalg.svd(inp, compute_uv=False)
    if sigma[0] == 0:
        return 0
    return int(np.sum(sigma > rtol * sigma[0]))
