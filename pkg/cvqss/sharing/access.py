import logging
from enum import Enum
from typing import List, NamedTuple

import numpy as np

from ..errors import EnumerationError
from ..utils import numerical_rank, ordered_map
from .decoding import RANK_RTOL, extract_blocks
from .scheme import PlayerSubset, SharingScheme

logger = logging.getLogger(__name__)

MAX_ENUMERATION_MODES = 16


class AccessClass(str, Enum):
    FULL = "full"
    PARTIAL = "partial"
    NONE = "none"


class AccessReport(NamedTuple):
    subset: PlayerSubset
    access_class: AccessClass
    recoverable: int


def recoverable_count(scheme: SharingScheme, subset: PlayerSubset) -> int:
    """Independent secret combinations the party reads without antisqueezing noise.

    This is rank([M | H]) - rank(M), clamped to [0, 2m].
    """
    if subset.k == 0:
        return 0
    blocks = extract_blocks(scheme, subset)
    count = numerical_rank(np.hstack([blocks.M, blocks.H]), RANK_RTOL) - numerical_rank(
        blocks.M, RANK_RTOL
    )
    return int(min(max(count, 0), 2 * scheme.m))


def classify_access(recoverable: int, m: int) -> AccessClass:
    if recoverable == 2 * m:
        return AccessClass.FULL
    if recoverable == 0:
        return AccessClass.NONE
    return AccessClass.PARTIAL


def access_report(scheme: SharingScheme, subset: PlayerSubset) -> AccessReport:
    recoverable = recoverable_count(scheme, subset)
    return AccessReport(subset, classify_access(recoverable, scheme.m), recoverable)


def access_structure(scheme: SharingScheme, workers: int = 1) -> List[AccessReport]:
    """Classify every nonempty player subset, ordered by size then lexicographically.

    Args:
        scheme (SharingScheme): Scheme to analyze.
        workers (int, optional): Threads used for the enumeration.
    """
    if scheme.n_tot > MAX_ENUMERATION_MODES:
        raise EnumerationError(
            f"Refusing to enumerate 2^{scheme.n_tot} subsets; "
            f"at most {MAX_ENUMERATION_MODES} modes are supported"
        )
    subsets = list(PlayerSubset.all(scheme.n_tot))
    logger.debug(f"Classifying {len(subsets)} subsets of a {scheme.n_tot}-mode scheme")
    return ordered_map(lambda subset: access_report(scheme, subset), subsets, workers)
