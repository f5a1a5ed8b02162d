from .scheme import PlayerSubset, SharingScheme, ramp_bound, threshold  # noqa: F401
from .decoding import (  # noqa: F401
    RANK_RTOL,
    DecodingPlan,
    EncodingBlocks,
    HomodyneSettings,
    decodability,
    decoding_plan,
    extract_blocks,
    homodyne_settings,
    kernel_basis,
)
from .access import (  # noqa: F401
    MAX_ENUMERATION_MODES,
    AccessClass,
    AccessReport,
    access_report,
    access_structure,
    classify_access,
    recoverable_count,
)
