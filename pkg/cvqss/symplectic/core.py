"""Real symplectic algebra in (all positions, then all momenta) ordering.

A vector of quadrature coefficients for n modes has length 2n and is laid out as
(q_1, ..., q_n, p_1, ..., p_n). Every matrix in cvqss uses this block convention.
"""

from typing import NamedTuple, Sequence, Tuple, Union

import numpy as np
from scipy import linalg

from ..errors import ValidationError
from ..utils import max_abs

DEFAULT_TOL = 1e-9

ArrayLike = Union[np.ndarray, Sequence[float]]


def _frozen(array: ArrayLike, dtype=np.float64) -> np.ndarray:
    array = np.array(array, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


def _check_even_square(matrix: np.ndarray, name: str = "matrix") -> int:
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValidationError(f"{name} must be square, got shape {matrix.shape}")
    if matrix.shape[0] % 2:
        raise ValidationError(f"{name} must have even dimension, got {matrix.shape[0]}")
    return matrix.shape[0] // 2


class SymplecticForm(NamedTuple):
    n: int
    matrix: np.ndarray


def symplectic_form(n: int) -> SymplecticForm:
    """Standard form J = [[0, I], [-I, 0]] on n modes."""
    if n < 1:
        raise ValidationError(f"Mode count must be positive, got {n}")
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return SymplecticForm(n=n, matrix=_frozen(np.block([[zero, eye], [-eye, zero]])))


def omega(n: int) -> np.ndarray:
    """Plain array of the standard form, n may be 0."""
    if n == 0:
        return np.zeros((0, 0))
    return symplectic_form(n).matrix


def symplectic_product(x: ArrayLike, y: ArrayLike) -> float:
    """Returns x^T J y for coefficient vectors of equal even length."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise ValidationError(f"Vectors must have equal 1-d shapes, got {x.shape} and {y.shape}")
    if x.size == 0 or x.size % 2:
        raise ValidationError(f"Vectors must have positive even length, got {x.size}")
    n = x.size // 2
    return float(x[:n] @ y[n:] - x[n:] @ y[:n])


def is_symplectic(matrix: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """True iff max-abs entry of S J S^T - J is at most tol."""
    matrix = np.asarray(matrix, dtype=np.float64)
    n = _check_even_square(matrix)
    if n == 0:
        return True
    J = omega(n)
    return max_abs(matrix @ J @ matrix.T - J) <= tol


def is_orthogonal(matrix: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """True iff max-abs entry of S S^T - I is at most tol."""
    matrix = np.asarray(matrix, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValidationError(f"matrix must be square, got shape {matrix.shape}")
    return max_abs(matrix @ matrix.T - np.eye(matrix.shape[0])) <= tol


def symplectic_rows_error(rows: np.ndarray) -> float:
    """Max-abs deviation of R J R^T from J for a 2m x 2k row block."""
    rows = np.asarray(rows, dtype=np.float64)
    if rows.ndim != 2 or rows.shape[0] % 2 or rows.shape[1] % 2:
        raise ValidationError(f"Row block must be 2m x 2k, got shape {rows.shape}")
    m, k = rows.shape[0] // 2, rows.shape[1] // 2
    return max_abs(rows @ omega(k) @ rows.T - omega(m))


class SymplecticMatrix:
    """A 2n x 2n real matrix S with S J S^T = J.

    Args:
        matrix (ndarray): The matrix, validated at construction.
        tol (float, optional): Tolerance of the symplecticity check.
    """

    def __init__(self, matrix: ArrayLike, tol: float = DEFAULT_TOL):
        matrix = _frozen(matrix)
        self._n = _check_even_square(matrix)
        if self._n < 1:
            raise ValidationError("Symplectic matrix needs at least one mode")
        if not is_symplectic(matrix, tol):
            raise ValidationError(
                f"Matrix is not symplectic within {tol:g}: "
                f"deviation {max_abs(matrix @ omega(self._n) @ matrix.T - omega(self._n)):.3g}"
            )
        self._matrix = matrix

    @property
    def n(self) -> int:
        return self._n

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def __repr__(self) -> str:
        return f"SymplecticMatrix(n={self.n})"


class PassiveInterferometer:
    """An n_tot-mode linear-optical network U = X + iY.

    The induced real matrix [[X, -Y], [Y, X]] is both orthogonal and symplectic.

    Args:
        X (ndarray): Real part of the unitary.
        Y (ndarray): Imaginary part of the unitary.
        tol (float, optional): Allowed max-abs deviation from unitarity.
    """

    def __init__(self, X: ArrayLike, Y: ArrayLike, tol: float = DEFAULT_TOL):
        X, Y = _frozen(X), _frozen(Y)
        if X.ndim != 2 or X.shape[0] != X.shape[1] or X.shape != Y.shape:
            raise ValidationError(
                f"X and Y must be equal square matrices, got {X.shape} and {Y.shape}"
            )
        if X.shape[0] < 1:
            raise ValidationError("Interferometer needs at least one mode")
        if not (np.all(np.isfinite(X)) and np.all(np.isfinite(Y))):
            raise ValidationError("X and Y must be finite")
        self._X, self._Y = X, Y
        error = self.unitarity_error()
        if not error <= tol:
            raise ValidationError(f"X + iY is not unitary within {tol:g}: deviation {error:.3g}")

    @classmethod
    def from_unitary(cls, U: np.ndarray, tol: float = DEFAULT_TOL) -> "PassiveInterferometer":
        U = np.asarray(U, dtype=np.complex128)
        return cls(U.real, U.imag, tol=tol)

    @classmethod
    def from_matrix(cls, matrix: np.ndarray, tol: float = DEFAULT_TOL) -> "PassiveInterferometer":
        """Read X and Y off an orthogonal-symplectic 2n x 2n matrix."""
        matrix = np.asarray(matrix, dtype=np.float64)
        n = _check_even_square(matrix)
        X = 0.5 * (matrix[:n, :n] + matrix[n:, n:])
        Y = 0.5 * (matrix[n:, :n] - matrix[:n, n:])
        interferometer = cls(X, Y, tol=tol)
        if max_abs(interferometer.matrix - matrix) > tol:
            raise ValidationError("Matrix does not have the [[X, -Y], [Y, X]] block form")
        return interferometer

    @property
    def n_tot(self) -> int:
        return self._X.shape[0]

    @property
    def X(self) -> np.ndarray:
        return self._X

    @property
    def Y(self) -> np.ndarray:
        return self._Y

    @property
    def unitary(self) -> np.ndarray:
        return self._X + 1j * self._Y

    @property
    def matrix(self) -> np.ndarray:
        return np.block([[self._X, -self._Y], [self._Y, self._X]])

    def unitarity_error(self) -> float:
        """Max-abs deviation of X^T X + Y^T Y from I and of X^T Y - Y^T X from 0."""
        X, Y = self._X, self._Y
        gram = X.T @ X + Y.T @ Y - np.eye(self.n_tot)
        skew = X.T @ Y - Y.T @ X
        return max(max_abs(gram), max_abs(skew))

    def project(self) -> "PassiveInterferometer":
        """Closest exactly-unitary interferometer (polar factor of X + iY)."""
        return nearest_passive(self._X, self._Y)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PassiveInterferometer):
            return NotImplemented
        return np.array_equal(self._X, other._X) and np.array_equal(self._Y, other._Y)

    def __repr__(self) -> str:
        return f"PassiveInterferometer(n_tot={self.n_tot})"


def unitary_to_symplectic(U: np.ndarray, tol: float = DEFAULT_TOL) -> PassiveInterferometer:
    """Passive interferometer of a complex unitary; rejects non-unitary input."""
    U = np.asarray(U, dtype=np.complex128)
    if U.ndim != 2 or U.shape[0] != U.shape[1]:
        raise ValidationError(f"U must be square, got shape {U.shape}")
    return PassiveInterferometer.from_unitary(U, tol=tol)


def nearest_passive(X: ArrayLike, Y: ArrayLike) -> PassiveInterferometer:
    """Polar projection of a nearly-unitary X + iY onto U(n).

    Printed matrices carry rounding noise around 1e-6; the unitary polar factor is
    the closest unitary in Frobenius norm.
    """
    X = np.asarray(X, dtype=np.float64)
    Y = np.asarray(Y, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] != X.shape[1] or X.shape != Y.shape:
        raise ValidationError(f"X and Y must be equal square matrices, got {X.shape} and {Y.shape}")
    unitary, _ = linalg.polar(X + 1j * Y)
    return PassiveInterferometer.from_unitary(unitary)


class SqueezerProfile:
    """Single-mode squeezing parameters; r > 0 squeezes momentum."""

    def __init__(self, r: ArrayLike):
        r = _frozen(np.atleast_1d(np.asarray(r, dtype=np.float64)))
        if r.ndim != 1 or r.size < 1:
            raise ValidationError(f"Squeezer profile must be a non-empty sequence, got {r.shape}")
        if not np.all(np.isfinite(r)):
            raise ValidationError("Squeezing parameters must be finite")
        self._r = r

    @classmethod
    def uniform(cls, n: int, r: float) -> "SqueezerProfile":
        return cls(np.full(n, float(r)))

    @property
    def r(self) -> np.ndarray:
        return self._r

    @property
    def n(self) -> int:
        return self._r.size

    @property
    def matrix(self) -> np.ndarray:
        return np.diag(np.concatenate([np.exp(self._r), np.exp(-self._r)]))

    def __repr__(self) -> str:
        return f"SqueezerProfile(r={self._r.tolist()})"


def squeezer_matrix(profile: SqueezerProfile) -> SymplecticMatrix:
    """K(r) = diag(e^{r_1}..e^{r_n}, e^{-r_1}..e^{-r_n})."""
    return SymplecticMatrix(profile.matrix)


def shear_matrix(coefficients: ArrayLike) -> np.ndarray:
    """[[I, 0], [C, I]] for symmetric C: p -> p + C q.

    A vector gives a diagonal C (independent single-mode shears).
    """
    C = np.asarray(coefficients, dtype=np.float64)
    if C.ndim == 1:
        C = np.diag(C)
    if C.ndim != 2 or C.shape[0] != C.shape[1] or not np.array_equal(C, C.T):
        raise ValidationError("Shear coefficients must form a symmetric matrix")
    n = C.shape[0]
    return np.block([[np.eye(n), np.zeros((n, n))], [C, np.eye(n)]])


def controlled_z_matrix(n: int, i: int, j: int, strength: float) -> np.ndarray:
    """Controlled-Z between modes i and j (0-based): p_i += g q_j, p_j += g q_i."""
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise ValidationError(f"Controlled-Z needs two distinct modes in [0, {n}), got {i}, {j}")
    C = np.zeros((n, n))
    C[i, j] = C[j, i] = strength
    return shear_matrix(C)


def symplectic_basis(rows: np.ndarray, tol: float = DEFAULT_TOL) -> Tuple[np.ndarray, np.ndarray]:
    """Symplectic basis of the subspace spanned by `rows`.

    The span must be a symplectic subspace (the restricted form is nondegenerate).

    Args:
        rows (ndarray): 2l x 2k matrix whose rows span the subspace.
        tol (float, optional): Smallest accepted block of the restricted form.

    Returns:
        (E, F): l x 2k arrays with <e_i, f_j> = delta_ij and <e_i, e_j> = <f_i, f_j> = 0.
    """
    rows = np.asarray(rows, dtype=np.float64)
    p = rows.shape[0]
    if p == 0:
        return np.zeros((0, rows.shape[1])), np.zeros((0, rows.shape[1]))
    if p % 2:
        raise ValidationError(f"A symplectic subspace has even dimension, got {p}")
    restricted = rows @ omega(rows.shape[1] // 2) @ rows.T
    restricted = 0.5 * (restricted - restricted.T)
    T, Z = linalg.schur(restricted, output="real")
    E, F = [], []
    for i in range(p // 2):
        a, b = Z[:, 2 * i], Z[:, 2 * i + 1]
        t = 0.5 * (T[2 * i, 2 * i + 1] - T[2 * i + 1, 2 * i])
        if abs(t) <= tol:
            raise ValidationError("Subspace is not symplectic: degenerate restricted form")
        if t < 0:
            a, b, t = b, a, -t
        E.append(a @ rows / np.sqrt(t))
        F.append(b @ rows / np.sqrt(t))
    return np.array(E), np.array(F)


def symplectic_eigenvalues(G: np.ndarray) -> np.ndarray:
    """Moduli of the eigenvalues of iJG, one per mode, descending."""
    G = np.asarray(G, dtype=np.float64)
    n = _check_even_square(G, "G")
    moduli = np.sort(np.abs(np.linalg.eigvals(1j * omega(n) @ G)))[::-1]
    return moduli[::2]
