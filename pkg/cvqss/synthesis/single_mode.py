"""Structured decoder for a single-mode secret.

Given rows x, y with <x, y> = 1, the decoder is built as

    composed = CZ · O2 · shear · K1 · O1

O1 is passive with first rows x/|x| and -J x/|x|, K1 squeezes mode 1 by |x| so the
first position row becomes x, the shear fixes the x-component of y, O2 gathers the
remaining component of y on mode 2 and a single controlled-Z between modes 1 and 2
adds it. Only K1, the shear and the controlled-Z squeeze, so at most two
squeezers appear in the Bloch–Messiah form.
"""

import numpy as np

from ..errors import ValidationError
from ..symplectic import SqueezerProfile, controlled_z_matrix, omega, shear_matrix
from .decoder import EMBED_TOL, FactoredDecoder, Stage, StageKind, assemble
from .generic import check_decoding_rows, extend_orthonormal_pairs

# Below this the remaining component of y is treated as absent.
ETA_TOL = 1e-12


def _householder(u: np.ndarray) -> np.ndarray:
    """Symmetric orthogonal matrix whose first row is the unit vector u."""
    e1 = np.zeros_like(u)
    e1[0] = 1.0
    w = e1 - u
    norm = w @ w
    if norm < 1e-30:
        return np.eye(u.size)
    return np.eye(u.size) - 2.0 * np.outer(w, w) / norm


def complete_m1(D: np.ndarray, tol: float = EMBED_TOL) -> FactoredDecoder:
    """Decoder for m = 1 with one single-mode squeezer, a shear and one controlled-Z.

    Args:
        D (ndarray): 2 x 2k decoding matrix with rows x, y and <x, y> = 1.
        tol (float, optional): Tolerance of the input and output checks.
    """
    D = np.asarray(D, dtype=np.float64)
    m, k = check_decoding_rows(D, tol)
    if m != 1:
        raise ValidationError(f"complete_m1 needs a single-mode secret, got m={m}")
    J = omega(k)
    x, y = D[0], D[1]

    norm_x = np.linalg.norm(x)
    x1 = x / norm_x
    y1 = -J @ x1
    xs, ys = extend_orthonormal_pairs(np.vstack([x1, y1]), k - 1)
    O1 = assemble([x1] + xs, [y1] + ys)
    K1 = SqueezerProfile(np.concatenate([[np.log(norm_x)], np.zeros(k - 1)])).matrix

    # y in the rows of K1 O1
    coefficients = np.linalg.solve((K1 @ O1).T, y)
    alpha, beta = coefficients[:k], coefficients[k:]
    shear = np.zeros(k)
    shear[0] = alpha[0]
    KS = shear_matrix(shear)

    stages = [
        Stage(StageKind.PASSIVE, O1),
        Stage(StageKind.SQUEEZER, K1),
        Stage(StageKind.SHEAR, KS),
    ]
    if k > 1:
        eta = np.hypot(alpha[1:], beta[1:])
        theta = np.concatenate([[0.0], np.arctan2(-beta[1:], alpha[1:])])
        X2, Y2 = np.diag(np.cos(theta)), np.diag(np.sin(theta))
        O2 = np.block([[X2, -Y2], [Y2, X2]])
        eta_norm = np.linalg.norm(eta)
        if eta_norm > ETA_TOL:
            Q = np.eye(k)
            Q[1:, 1:] = _householder(eta / eta_norm)
            zero = np.zeros((k, k))
            O2 = np.block([[Q, zero], [zero, Q]]) @ O2
        stages.append(Stage(StageKind.PASSIVE, O2))
        if eta_norm > ETA_TOL:
            stages.append(Stage(StageKind.CONTROLLED_Z, controlled_z_matrix(k, 0, 1, eta_norm)))
    return FactoredDecoder(stages, D, tol=tol)
