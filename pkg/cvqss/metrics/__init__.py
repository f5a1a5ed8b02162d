from .channel import (  # noqa: F401
    ChannelClass,
    ChannelReport,
    apply_channel,
    channel_report,
    check_noise_matrix,
    classify_channel,
    db_to_r,
    fidelity_coherent,
    fidelity_gaussian,
    is_valid_channel,
    noise_matrix,
    nu_max,
    r_to_db,
    required_db,
    sigma2,
)
from .sweep import PartyQuality, SqueezeGridPoint, db_grid, sweep, worst_party_score  # noqa: F401
