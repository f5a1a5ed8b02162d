from .common import coerce_numpy, as_tensor  # noqa: F401
from .functional import *  # noqa: F401,F403
from .parallel import ordered_map, child_seed  # noqa: F401
