from .exact import (
    LadderParams,
    ladder_params,
    build_q_ladder,
    ab_sequences,
    pi0_bessel,
    stationary_ladder,
    speed_ladder,
    speed_ladder_scaled,
)

__all__ = [
    "LadderParams", "ladder_params", "build_q_ladder", "ab_sequences",
    "pi0_bessel", "stationary_ladder", "speed_ladder", "speed_ladder_scaled",
]
