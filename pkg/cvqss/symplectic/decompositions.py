"""Bloch–Messiah and Williamson decompositions."""

from typing import NamedTuple, Tuple, Union

import numpy as np
from scipy import linalg

from ..errors import ValidationError
from ..utils import max_abs, symmetrize_array
from .core import (
    DEFAULT_TOL,
    PassiveInterferometer,
    SqueezerProfile,
    SymplecticMatrix,
    _check_even_square,
    is_symplectic,
    omega,
)

TAKAGI_ZERO = 1e-13


class BlochMessiahFactors(NamedTuple):
    left: PassiveInterferometer
    squeeze: SqueezerProfile
    right: PassiveInterferometer

    def reconstruct(self) -> np.ndarray:
        return self.left.matrix @ self.squeeze.matrix @ self.right.matrix


def takagi(A: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Autonne–Takagi factorization A = U diag(s) U^T of a complex symmetric matrix.

    Args:
        A (ndarray): Complex symmetric n x n matrix.

    Returns:
        (s, U): nonnegative values in descending order and a unitary U.
    """
    A = np.asarray(A, dtype=np.complex128)
    A = 0.5 * (A + A.T)
    n = A.shape[0]
    # log of a passive polar factor is zero up to rounding
    if max_abs(np.abs(A)) <= TAKAGI_ZERO:
        return np.zeros(n), np.eye(n, dtype=np.complex128)

    if max_abs(A.imag) <= 1e-14 * max_abs(np.abs(A)):
        vals, U = linalg.eigh(A.real)
        phases = np.where(vals < 0, -1.0, 1.0).astype(np.complex128)
        U = U * np.sqrt(phases)[None, :]
        s = np.abs(vals)
        order = np.argsort(-s, kind="stable")
        return s[order], U[:, order]

    u, s, vh = linalg.svd(A)
    # vh conj(u) is block diagonal on groups of equal singular values
    U = u @ linalg.sqrtm((vh @ u.conj()).T)
    return s, U


def bloch_messiah(
    S: Union[SymplecticMatrix, np.ndarray], tol: float = DEFAULT_TOL
) -> BlochMessiahFactors:
    """Factor S as passive · squeezers · passive.

    The polar decomposition S = O P splits off the orthogonal part. log(P) has the
    block form [[A, B], [B, -A]], which is the real image of the complex symmetric
    matrix A + iB; its Takagi factorization gives the squeezing and the passive
    basis in which P is diagonal.

    Args:
        S (SymplecticMatrix or ndarray): Symplectic matrix to factor.
        tol (float, optional): Symplecticity tolerance of the input.
    """
    matrix = S.matrix if isinstance(S, SymplecticMatrix) else np.asarray(S, dtype=np.float64)
    n = _check_even_square(matrix, "S")
    if not is_symplectic(matrix, tol):
        raise ValidationError(f"Bloch–Messiah needs a symplectic matrix within {tol:g}")

    orthogonal, positive = linalg.polar(matrix)
    lam, vecs = linalg.eigh(symmetrize_array(positive))
    log_positive = (vecs * np.log(lam)[None, :]) @ vecs.T

    A = 0.5 * (log_positive[:n, :n] - log_positive[n:, n:])
    B = 0.5 * (log_positive[:n, n:] + log_positive[n:, :n])
    r, unitary = takagi(A + 1j * B)

    basis = np.block([[unitary.real, -unitary.imag], [unitary.imag, unitary.real]])
    factor_tol = max(100 * tol, 1e-7)
    factors = BlochMessiahFactors(
        left=PassiveInterferometer.from_matrix(orthogonal @ basis, tol=factor_tol),
        squeeze=SqueezerProfile(r),
        right=PassiveInterferometer.from_matrix(basis.T, tol=factor_tol),
    )
    error = max_abs(factors.reconstruct() - matrix)
    if error > 100 * tol * max(1.0, np.linalg.norm(matrix, 2)):
        raise ValidationError(f"Bloch–Messiah reconstruction error {error:.3g} exceeds tolerance")
    return factors


def williamson(G: np.ndarray, tol: float = DEFAULT_TOL) -> Tuple[SymplecticMatrix, np.ndarray]:
    """Williamson normal form G = S_w diag(nu, nu) S_w^T.

    Uses the real Schur form of the antisymmetric matrix G^{-1/2} J G^{-1/2}, whose
    2x2 blocks carry 1/nu.

    Args:
        G (ndarray): Symmetric positive-definite 2n x 2n matrix.
        tol (float, optional): Symmetry tolerance of the input.

    Returns:
        (S_w, nu): symplectic S_w and the symplectic eigenvalues, descending.
    """
    G = np.asarray(G, dtype=np.float64)
    n = _check_even_square(G, "G")
    if max_abs(G - G.T) > tol * max(1.0, max_abs(G)):
        raise ValidationError("Williamson decomposition needs a symmetric matrix")
    G = symmetrize_array(G)
    lam, vecs = linalg.eigh(G)
    if lam[0] <= 0:
        raise ValidationError(f"Matrix is not positive definite: smallest eigenvalue {lam[0]:.3g}")
    sqrt_G = (vecs * np.sqrt(lam)[None, :]) @ vecs.T
    inv_sqrt_G = (vecs / np.sqrt(lam)[None, :]) @ vecs.T

    T, Z = linalg.schur(inv_sqrt_G @ omega(n) @ inv_sqrt_G, output="real")
    positions, momenta, t = [], [], []
    for i in range(n):
        a, b = Z[:, 2 * i], Z[:, 2 * i + 1]
        block = 0.5 * (T[2 * i, 2 * i + 1] - T[2 * i + 1, 2 * i])
        if block < 0:
            a, b, block = b, a, -block
        positions.append(a)
        momenta.append(b)
        t.append(block)

    # largest nu first
    order = np.argsort(t, kind="stable")
    t = np.asarray(t)[order]
    K = np.column_stack([positions[i] for i in order] + [momenta[i] for i in order])
    S_w = sqrt_G @ K @ np.diag(np.sqrt(np.concatenate([t, t])))
    return SymplecticMatrix(S_w, tol=max(1e-7, tol)), 1.0 / t
