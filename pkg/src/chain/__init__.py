from .front import (
    FrontChain,
    ladder_chain,
    diagonal_chain,
    with_truncation,
    solve_stationary,
    speed_at_stationarity,
    residual,
    chain_speed,
)

__all__ = [
    "FrontChain", "ladder_chain", "diagonal_chain", "with_truncation",
    "solve_stationary", "speed_at_stationarity", "residual", "chain_speed",
]
