"""Completion through the purification of D D^T.

Treat G = D D^T as a covariance. Its modes with symplectic eigenvalue 1 are already
spanned together with their J-images; each mode with nu > 1 needs one extra pair of
rows from the J-image of span(D). After adding those rows the span is J-invariant,
so the rest of the decoder is passive and only m + l <= 2m squeezers remain.
"""

import logging

import numpy as np
from scipy import linalg

from ..errors import SynthesisError, ValidationError
from ..symplectic import SymplecticMatrix, is_symplectic, omega, symplectic_basis, williamson
from ..utils import max_abs
from .decoder import EMBED_TOL, assemble
from .generic import check_decoding_rows, extend_orthonormal_pairs

logger = logging.getLogger(__name__)

PURIFICATION_MAX_ITER = 50
PURIFICATION_TOL = 1e-10
NU_THRESHOLD = 1e-9


def _purifying_rows(D: np.ndarray, candidates: np.ndarray, max_iter: int, conv: float):
    m, k = D.shape[0] // 2, D.shape[1] // 2
    J = omega(k)
    constraint = D @ J @ D.T
    W = candidates
    for iteration in range(max_iter):
        # least-squares removal of the span(D) part that violates W J D^T = 0
        shift, *_ = np.linalg.lstsq(constraint, D @ J @ W.T, rcond=None)
        W = W - shift.T @ D
        try:
            E, F = symplectic_basis(W)
        except ValidationError as err:
            raise SynthesisError(f"Purifying rows became degenerate: {err}")
        W = np.vstack([E, F])
        residual = max(
            max_abs(W @ J @ D.T),
            max_abs(W @ J @ W.T - omega(W.shape[0] // 2)),
        )
        if residual <= conv:
            logger.debug(f"Purifying rows converged after {iteration + 1} iterations")
            return E, F
    raise SynthesisError(f"Purifying rows did not converge in {max_iter} iterations")


def purification_completion(
    D: np.ndarray,
    tol: float = EMBED_TOL,
    max_iter: int = PURIFICATION_MAX_ITER,
    conv: float = PURIFICATION_TOL,
) -> SymplecticMatrix:
    """Symplectic completion of D using at most m + l squeezers.

    Args:
        D (ndarray): 2m x 2k decoding matrix with D J D^T = J.
        tol (float, optional): Tolerance of the input and output checks.
        max_iter (int, optional): Iteration cap of the constrained row solve.
        conv (float, optional): Convergence threshold of the row solve.

    Raises:
        SynthesisError: the row solve failed; callers fall back to the generic completion.
    """
    D = np.asarray(D, dtype=np.float64)
    m, k = check_decoding_rows(D, tol)
    J = omega(k)
    S_w, nu = williamson(D @ D.T)
    l = int(np.sum(nu > 1 + NU_THRESHOLD))
    if m + l > k:
        raise SynthesisError(f"Purification needs {m + l} modes but the party holds {k}")

    if l:
        # rows of S_w^{-1} D are Williamson-normal; J-images of the first l are new
        normal = np.linalg.solve(S_w.matrix, D)
        candidates = np.vstack([normal[:l] @ J.T, normal[m:m + l] @ J.T])
        E, F = _purifying_rows(D, candidates, max_iter, conv)
    else:
        E, F = np.zeros((0, 2 * k)), np.zeros((0, 2 * k))

    purified = assemble([D[:m], E], [D[m:], F])
    span = linalg.orth(purified.T).T
    xs, ys = extend_orthonormal_pairs(span, k - m - l)
    completed = assemble([D[:m], E] + xs, [D[m:], F] + ys)
    if not is_symplectic(completed, tol):
        raise SynthesisError("Purified completion is not symplectic")
    logger.debug(f"Purification added {l} mode(s); symplectic eigenvalues {nu}")
    return SymplecticMatrix(completed, tol=tol)
