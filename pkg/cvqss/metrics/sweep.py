import logging
import math
from typing import List, NamedTuple, Sequence, Tuple

import torch

from ..errors import DecodabilityError
from ..sharing import PlayerSubset, SharingScheme, decoding_plan
from .channel import ChannelClass, classify_channel, db_to_r, sigma2

logger = logging.getLogger(__name__)


class PartyQuality(NamedTuple):
    party: PlayerSubset
    nu_max: float
    fidelity: float
    channel_class: ChannelClass


class SqueezeGridPoint(NamedTuple):
    r: float
    db: float
    parties: Tuple[PartyQuality, ...]
    worst: PlayerSubset
    best: PlayerSubset


def noise_weights(scheme: SharingScheme, parties: Sequence[PlayerSubset]) -> torch.Tensor:
    """Stack the B matrices of the parties, shape (parties, 2m, n)."""
    weights = []
    for party in parties:
        plan = decoding_plan(scheme, party)
        if not plan.decodable:
            raise DecodabilityError(f"Party {party.label} cannot decode the secret")
        weights.append(torch.from_numpy(plan.B.copy()))
    return torch.stack(weights)


def sweep(
    scheme: SharingScheme, parties: Sequence[PlayerSubset], db_grid: Sequence[float]
) -> List[SqueezeGridPoint]:
    """nu_max, fidelity and channel class of every party over a grid of squeezing levels.

    All grid points are evaluated in one batch. Uniform squeezing scales every noise
    matrix by the same factor, so nu_max(r) is computed as sigma^2(r) lambda_max(B B^T)
    and the worst and best parties do not change along the grid.

    Args:
        scheme (SharingScheme): Encoding under study.
        parties (sequence of PlayerSubset): Decodable access parties.
        db_grid (sequence of float): Squeezing levels in dB.

    Returns:
        Grid points ordered by db; parties within a point ordered by label.
    """
    if not parties:
        raise DecodabilityError("Sweep needs at least one access party")
    parties = sorted(parties, key=lambda party: party.label)
    grid = sorted(float(db) for db in db_grid)
    weights = noise_weights(scheme, parties)
    gram = weights @ weights.transpose(-1, -2)
    largest = torch.linalg.eigvalsh(gram)[..., -1].clamp(min=0.0)

    r = torch.tensor([db_to_r(db) for db in grid], dtype=torch.float64)
    variances = sigma2(r)
    nu = variances[:, None] * largest[None, :]
    eye = torch.eye(gram.shape[-1], dtype=torch.float64)
    fidelity = 1.0 / torch.sqrt(torch.linalg.det(eye + variances[:, None, None, None] * gram[None]))
    logger.debug(f"Swept {len(parties)} parties over {len(grid)} squeezing levels")

    points = []
    for g, db in enumerate(grid):
        qualities = tuple(
            PartyQuality(
                party=party,
                nu_max=nu[g, p].item(),
                fidelity=fidelity[g, p].item(),
                channel_class=classify_channel(nu[g, p].item()),
            )
            for p, party in enumerate(parties)
        )
        worst = max(range(len(parties)), key=lambda p: (largest[p].item(), -p))
        best = min(range(len(parties)), key=lambda p: (largest[p].item(), p))
        points.append(SqueezeGridPoint(r[g].item(), db, qualities, parties[worst], parties[best]))
    return points


def db_grid(db_min: float, db_max: float, steps: int) -> List[float]:
    """`steps` evenly spaced levels from db_min to db_max inclusive."""
    if steps < 1:
        raise ValueError(f"Need at least one grid step, got {steps}")
    if steps == 1:
        return [float(db_min)]
    width = (db_max - db_min) / (steps - 1)
    return [db_min + i * width for i in range(steps)]


def worst_party_score(scheme: SharingScheme, parties: Sequence[PlayerSubset]) -> float:
    """max over parties of lambda_max(B B^T); infinite if any party cannot decode."""
    try:
        weights = noise_weights(scheme, parties)
    except DecodabilityError:
        return math.inf
    gram = weights @ weights.transpose(-1, -2)
    return torch.linalg.eigvalsh(gram)[..., -1].max().item()
