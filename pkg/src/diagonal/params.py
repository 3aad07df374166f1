import math
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..errors import RegimeError
from ..specfun.gamma import gamma

LAMBDA_MAX = 1e3


class DiagParams(BaseModel):
    """Ladder with diagonals: vertical intensity lambda, horizontal and diagonal 1."""

    model_config = ConfigDict(frozen=True)

    lam: float = Field(ge=0.0, le=LAMBDA_MAX)

    @property
    def alpha(self) -> float:
        return 1.0 / (2.0 + self.lam)

    @property
    def gamma_hat(self) -> float:
        return -self.lam / (2.0 + self.lam)


class GFParams(BaseModel):
    """Generating-function parameters of the normalized c_n / d_n recursion."""

    model_config = ConfigDict(frozen=True)

    alpha: float
    beta1: float
    beta2: float
    beta3: float
    gamma: float
    C: float
    D: float
    R_hat: Tuple[float, float, float]
    R_star: Tuple[float, float, float]


def diag_params(lam: float) -> DiagParams:
    if not 0.0 <= lam <= LAMBDA_MAX:
        raise RegimeError(f"diagonal lambda={lam} outside supported range [0, {LAMBDA_MAX:g}]")
    return DiagParams(lam=lam)


def gf_params(p: DiagParams) -> GFParams:
    lam = p.lam
    s = 2.0 + lam
    alpha = 1.0 / s
    beta1 = (7.0 + 2.0 * lam) / s
    beta2 = -(6.0 + lam) / s**2
    beta3 = 2.0 / s**3
    return GFParams(
        alpha=alpha,
        beta1=beta1,
        beta2=beta2,
        beta3=beta3,
        gamma=alpha - beta1,
        C=beta3 / alpha,
        D=beta3 / alpha**2 + beta2 / alpha + beta1 - alpha,
        R_hat=(5.0 + lam, -7.0 * alpha, 4.0 * alpha**2),
        R_star=(1.0 + lam, alpha, 0.0),
    )


def exp_weight(p: DiagParams) -> float:
    """e^{-2 alpha} / Gamma(gamma_hat + 1), the recurring boundary term."""
    return math.exp(-2.0 * p.alpha) / gamma(p.gamma_hat + 1.0)
