from typing import List, Tuple

import numpy as np
from scipy import linalg

from ..errors import ValidationError
from ..symplectic import SymplecticMatrix, omega, symplectic_basis, symplectic_rows_error
from .decoder import EMBED_TOL, assemble


def check_decoding_rows(D: np.ndarray, tol: float = EMBED_TOL) -> Tuple[int, int]:
    """Validate D J D^T = J and return (m, k)."""
    D = np.asarray(D, dtype=np.float64)
    if D.ndim != 2 or D.shape[0] % 2 or D.shape[1] % 2 or D.shape[0] == 0:
        raise ValidationError(f"D must be 2m x 2k, got shape {D.shape}")
    m, k = D.shape[0] // 2, D.shape[1] // 2
    if m > k:
        raise ValidationError(f"D has more secret modes ({m}) than party modes ({k})")
    error = symplectic_rows_error(D)
    if error > tol:
        raise ValidationError(f"D J D^T deviates from J by {error:.3g}")
    return m, k


def extend_orthonormal_pairs(basis: np.ndarray, count: int) -> Tuple[List[np.ndarray], List[np.ndarray]]:
    """Add `count` orthonormal pairs (x, -Jx) orthogonal to a J-invariant subspace.

    Each x is the coordinate vector with the largest residual after projecting out
    the current basis (first index wins ties), normalized.

    Args:
        basis (ndarray): Orthonormal rows spanning a J-invariant subspace of R^{2k}.
        count (int): Number of pairs to add.
    """
    dim = basis.shape[1]
    J = omega(dim // 2)
    rows = [row for row in basis]
    xs, ys = [], []
    for _ in range(count):
        Q = np.array(rows).reshape(-1, dim)
        projector = np.eye(dim) - Q.T @ Q
        residuals = np.linalg.norm(projector, axis=0)
        x = projector[:, int(np.argmax(residuals))]
        x = x - Q.T @ (Q @ x)
        x /= np.linalg.norm(x)
        y = -J @ x
        rows.extend([x, y])
        xs.append(x)
        ys.append(y)
    return xs, ys


def complete_symplectic_generic(D: np.ndarray, tol: float = EMBED_TOL) -> SymplecticMatrix:
    """Complete the rows of D to a symplectic matrix by symplectic Gram–Schmidt.

    The symplectic complement {w : D J w = 0} is itself symplectic; a symplectic
    basis of it fills the remaining positions and momenta.
    """
    D = np.asarray(D, dtype=np.float64)
    m, k = check_decoding_rows(D, tol)
    complement = linalg.null_space(D @ omega(k)).T
    E, F = symplectic_basis(complement)
    return SymplecticMatrix(assemble([D[:m], E], [D[m:], F]), tol=tol)
