import logging
from typing import Callable, Dict

import numpy as np

from ..errors import SynthesisError
from .decoder import (  # noqa: F401
    EMBED_TOL,
    SQUEEZER_THRESHOLD,
    FactoredDecoder,
    SqueezerBudget,
    Stage,
    StageKind,
    embedded_rows,
    factor_decoder,
    squeezer_budget,
)
from .generic import complete_symplectic_generic, extend_orthonormal_pairs  # noqa: F401
from .purification import purification_completion  # noqa: F401
from .single_mode import complete_m1

logger = logging.getLogger(__name__)


def _generic(D: np.ndarray) -> FactoredDecoder:
    return factor_decoder(complete_symplectic_generic(D), D)


def _purification(D: np.ndarray) -> FactoredDecoder:
    try:
        completion = purification_completion(D)
    except SynthesisError as err:
        logger.warning(f"Purification failed ({err}); using the generic completion")
        completion = complete_symplectic_generic(D)
    return factor_decoder(completion, D)


COMPLETIONS: Dict[str, Callable[[np.ndarray], FactoredDecoder]] = {
    "m1": complete_m1,
    "generic": _generic,
    "purification": _purification,
}


def get(name: str) -> Callable[[np.ndarray], FactoredDecoder]:
    try:
        return COMPLETIONS[name.lower()]
    except KeyError:
        raise KeyError(f"Unrecognized completion {name}")


def complete(D: np.ndarray, method: str = "purification") -> FactoredDecoder:
    """Synthesize a FactoredDecoder for D with the named completion."""
    return get(method)(D)
