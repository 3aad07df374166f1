from .params import DiagParams, GFParams, diag_params, gf_params
from .exact import (
    CDSeq,
    build_q_diagonal,
    cd_sequences,
    pi0_diagonal,
    pi0_lambda0,
    sigma_lambda0,
    speed_diagonal,
    speed_diagonal_scaled,
)
from .integrals import ij_integrals, l_limits, s_sums

__all__ = [
    "DiagParams", "GFParams", "diag_params", "gf_params",
    "CDSeq", "build_q_diagonal", "cd_sequences", "pi0_diagonal", "pi0_lambda0",
    "sigma_lambda0", "speed_diagonal", "speed_diagonal_scaled",
    "ij_integrals", "l_limits", "s_sums",
]
