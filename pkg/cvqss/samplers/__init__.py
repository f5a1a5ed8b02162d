from typing import Dict, List, Type

from ..symplectic import PassiveInterferometer
from ..utils import child_seed, ordered_map
from .base_sampler import BaseSampler, SAMPLE_TOL, make_rng  # noqa: F401
from .euler import (  # noqa: F401
    EulerAngles,
    EulerSampler,
    angle_pairs,
    compose_from_angles,
    elementary_rotation,
    haar_density,
    hurwitz_density,
    sample_angles,
)
from .orthonormalize import OrthonormalizeSampler


SAMPLERS: Dict[str, Type[BaseSampler]] = {
    "euler": EulerSampler,
    "orthonormalize": OrthonormalizeSampler,
}


def get(name: str) -> Type[BaseSampler]:
    try:
        return SAMPLERS[name.lower()]
    except KeyError:
        raise KeyError(f"Unrecognized sampling method {name}")


def sample_haar(n: int, seed: int, method: str = "orthonormalize") -> PassiveInterferometer:
    """Haar-random n-mode interferometer, deterministic in (seed, method)."""
    return get(method)().sample(n, seed)


def sample_batch(
    n: int, seed: int, count: int, method: str = "orthonormalize", workers: int = 1
) -> List[PassiveInterferometer]:
    """`count` samples where task i uses seed XOR i; identical for any worker count."""
    sampler = get(method)()
    return ordered_map(lambda i: sampler.sample(n, child_seed(seed, i)), range(count), workers)
