"""Quality of the encode-decode channel seen by an access party.

The decoded secret is the input plus B p^sqz, i.e. a Gaussian channel with T = I,
no displacement and noise N = B diag(sigma^2(r)) B^T, sigma^2(r) = e^{-2r}/2.
Functions take torch tensors or numpy arrays and compute in float64.
"""

import math
from enum import Enum
from typing import NamedTuple, Tuple, Union

import torch

from ..errors import ValidationError
from ..symplectic import SqueezerProfile
from ..utils import as_tensor, coerce_numpy, symmetrize_matrix

SYMMETRY_TOL = 1e-12
PSD_TOL = 1e-10

Squeezing = Union[float, SqueezerProfile]


class ChannelClass(str, Enum):
    ENTANGLEMENT_BREAKING = "entanglement_breaking"
    INTERMEDIATE = "intermediate"
    BEST_COPY = "best_copy"


class ChannelReport(NamedTuple):
    noise: torch.Tensor
    nu_max: float
    channel_class: ChannelClass
    fidelity: float


def db_to_r(db: float) -> float:
    """Squeezing parameter of a squeezing level in dB, db * ln(10) / 20."""
    return db * math.log(10) / 20


def r_to_db(r: float) -> float:
    """10 log10(e^{2r}) = (20 / ln 10) r."""
    return 20 / math.log(10) * r


def sigma2(r):
    """Variance e^{-2r}/2 of a momentum-squeezed ancilla."""
    if isinstance(r, torch.Tensor):
        return 0.5 * torch.exp(-2 * r.to(torch.float64))
    return 0.5 * math.exp(-2 * r)


def _variances(r: Squeezing, n: int) -> torch.Tensor:
    if isinstance(r, SqueezerProfile):
        if r.n != n:
            raise ValidationError(f"Squeezer profile has {r.n} entries, B has {n} columns")
        return sigma2(torch.from_numpy(r.r.copy()))
    return torch.full((n,), sigma2(float(r)), dtype=torch.float64)


def check_noise_matrix(N: torch.Tensor) -> torch.Tensor:
    """Validate a noise matrix: square, symmetric at 1e-12, eigenvalues >= -1e-10."""
    N = as_tensor(N)
    if N.dim() != 2 or N.shape[0] != N.shape[1]:
        raise ValidationError(f"Noise matrix must be square, got shape {tuple(N.shape)}")
    if N.numel() and (N - N.T).abs().max() > SYMMETRY_TOL:
        raise ValidationError("Noise matrix is not symmetric")
    if N.numel() and torch.linalg.eigvalsh(N)[0] < -PSD_TOL:
        raise ValidationError("Noise matrix is not positive semidefinite")
    return N


@coerce_numpy
def is_valid_channel(N: torch.Tensor) -> bool:
    """N + iJ - iTJT^T >= 0 with T = I, which reduces to N >= 0."""
    try:
        check_noise_matrix(N)
    except ValidationError:
        return False
    return True


@coerce_numpy
def noise_matrix(B: torch.Tensor, r: Squeezing) -> torch.Tensor:
    """Noise N = B diag(sigma^2(r_1)..sigma^2(r_n)) B^T.

    Args:
        B (tensor): 2m x n noise weights of a decoding plan.
        r (float or SqueezerProfile): Uniform squeezing or one value per ancilla.
    """
    B = as_tensor(B)
    if B.dim() != 2 or B.shape[0] % 2:
        raise ValidationError(f"B must be 2m x n, got shape {tuple(B.shape)}")
    variances = _variances(r, B.shape[1])
    return symmetrize_matrix((B * variances[None, :]) @ B.T)


@coerce_numpy
def apply_channel(
    cov: torch.Tensor, mean: torch.Tensor, N: torch.Tensor
) -> Tuple[torch.Tensor, torch.Tensor]:
    """Send a Gaussian state (cov, mean) through the additive-noise channel."""
    cov, mean, N = as_tensor(cov), as_tensor(mean), check_noise_matrix(N)
    if cov.shape != N.shape or mean.shape != (N.shape[0],):
        raise ValidationError(
            f"Covariance {tuple(cov.shape)} and mean {tuple(mean.shape)} do not match "
            f"noise {tuple(N.shape)}"
        )
    if (cov - cov.T).abs().max() > SYMMETRY_TOL * max(1.0, cov.abs().max().item()):
        raise ValidationError("Covariance matrix is not symmetric")
    _, info = torch.linalg.cholesky_ex(cov)
    if info.item() != 0:
        raise ValidationError("Covariance matrix is not positive definite")
    return cov + N, mean.clone()


@coerce_numpy
def fidelity_gaussian(N: torch.Tensor) -> torch.Tensor:
    """Fidelity 1/sqrt(det(I + N)) between a coherent secret and its decoded copy."""
    N = check_noise_matrix(N)
    eye = torch.eye(N.shape[0], dtype=torch.float64)
    return 1.0 / torch.sqrt(torch.linalg.det(eye + N))


@coerce_numpy
def fidelity_coherent(B: torch.Tensor, r: float) -> torch.Tensor:
    """Single-mode fidelity 1/sqrt(1 + sigma^2 eta + sigma^4 zeta).

    Here eta = Tr(B B^T) and zeta = det(B B^T); only uniform squeezing is allowed.
    """
    if isinstance(r, SqueezerProfile):
        raise ValidationError("fidelity_coherent needs a uniform squeezing parameter")
    B = as_tensor(B)
    if B.dim() != 2 or B.shape[0] != 2:
        raise ValidationError(f"fidelity_coherent needs a 2-row B, got shape {tuple(B.shape)}")
    gram = B @ B.T
    s = sigma2(float(r))
    return 1.0 / torch.sqrt(1 + s * torch.trace(gram) + s ** 2 * torch.linalg.det(gram))


@coerce_numpy
def nu_max(N: torch.Tensor) -> torch.Tensor:
    """Largest eigenvalue of the noise matrix."""
    N = check_noise_matrix(N)
    return torch.linalg.eigvalsh(N)[-1]


def classify_channel(nu: float) -> ChannelClass:
    """entanglement_breaking above 1, best_copy below 0.5, intermediate otherwise."""
    if nu < 0:
        raise ValidationError(f"nu_max cannot be negative, got {nu}")
    if nu > 1:
        return ChannelClass.ENTANGLEMENT_BREAKING
    if nu < 0.5:
        return ChannelClass.BEST_COPY
    return ChannelClass.INTERMEDIATE


@coerce_numpy
def required_db(B: torch.Tensor, nu_target: float = 0.5) -> float:
    """Smallest uniform squeezing in dB at which nu_max drops below nu_target."""
    B = as_tensor(B)
    largest = torch.linalg.eigvalsh(B @ B.T)[-1].item()
    if largest <= 0:
        return 0.0
    return max(0.0, 10 * math.log10(largest / (2 * nu_target)))


def channel_report(B: torch.Tensor, r: Squeezing) -> ChannelReport:
    noise = noise_matrix(as_tensor(B), r)
    largest = max(float(nu_max(noise)), 0.0)
    return ChannelReport(
        noise=noise,
        nu_max=largest,
        channel_class=classify_channel(largest),
        fidelity=float(fidelity_gaussian(noise)),
    )
