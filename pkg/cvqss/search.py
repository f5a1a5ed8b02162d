"""Random search for the interferometer whose worst access party is least noisy."""

import logging
from typing import List, NamedTuple

import numpy as np

from . import samplers
from .metrics import worst_party_score
from .sharing import SharingScheme
from .utils import child_seed, ordered_map

logger = logging.getLogger(__name__)

CRITERIA = ("min-numax",)


class SearchResult(NamedTuple):
    index: int
    seed: int
    scheme: SharingScheme
    score: float
    scores: List[float]


def score_scheme(scheme: SharingScheme) -> float:
    """Worst threshold-size party lambda_max(B B^T).

    nu_max of every party scales by the same factor under uniform squeezing, so this
    ranks schemes identically at any squeezing level.
    """
    return worst_party_score(scheme, scheme.threshold_subsets())


def random_search(
    n: int,
    m: int,
    samples: int,
    seed: int,
    method: str = "orthonormalize",
    workers: int = 1,
) -> SearchResult:
    """Sample `samples` schemes with seeds seed XOR i and keep the best-scoring one.

    Ties go to the lowest index, and results are merged in index order, so the winner
    does not depend on the number of workers.
    """
    if samples < 1:
        raise ValueError(f"Need at least one sample, got {samples}")
    sampler = samplers.get(method)()

    def evaluate(index: int):
        scheme = SharingScheme(n, m, sampler.sample(n + m, child_seed(seed, index)))
        return scheme, score_scheme(scheme)

    results = ordered_map(evaluate, range(samples), workers)
    scores = [score for _, score in results]
    best = min(range(samples), key=lambda i: (scores[i], i))
    logger.info(
        f"Best of {samples} samples: index {best}, score {scores[best]:.6g}, "
        f"median {float(np.median(scores)):.6g}"
    )
    return SearchResult(best, child_seed(seed, best), results[best][0], scores[best], scores)
