"""
Reparametrized Bessel functions and their bilinear combinations.

For a frame (A, B) the functions J^_n = J_{n+A/B}(2/B) and Y^_n = Y_{n+A/B}(2/B)
satisfy C_{n+1} + C_{n-1} = (A + B n) C_n. Upsilon and Delta are built on top
and solve the front-process recursions of the plain ladder.
"""
import math
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from .bessel import Tolerance, bessel_j, bessel_y
from .gamma import log_gamma

_LOG_SWITCH = 300.0


class BesselFrame(BaseModel):
    model_config = ConfigDict(frozen=True)

    A: float
    B: float = Field(gt=0)

    @property
    def shift(self) -> float:
        return self.A / self.B

    @property
    def z(self) -> float:
        return 2.0 / self.B

    def order(self, n: int) -> float:
        return n + self.shift


def j_hat(n: int, frame: BesselFrame, tol: Optional[Tolerance] = None) -> float:
    return bessel_j(frame.order(n), frame.z, tol)


def y_hat(n: int, frame: BesselFrame, tol: Optional[Tolerance] = None) -> float:
    return bessel_y(frame.order(n), frame.z, tol)


def upsilon(n: int, m: int, frame: BesselFrame, tol: Optional[Tolerance] = None) -> float:
    """pi * (J^_n Y^_m - J^_m Y^_n)."""
    if n < 0 or m < 0:
        raise ValueError(f"indices must be >= 0, got n={n}, m={m}")
    if n == m:
        return 0.0
    jn, jm = j_hat(n, frame, tol), j_hat(m, frame, tol)
    yn, ym = y_hat(n, frame, tol), y_hat(m, frame, tol)
    return math.pi * (jn * ym - jm * yn)


def delta(n: int, m: int, frame: BesselFrame, tol: Optional[Tolerance] = None) -> float:
    """Upsilon_n - Upsilon_{n-1}."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return upsilon(n, m, frame, tol) - upsilon(n - 1, m, frame, tol)


def upsilon_growth_ratio(n: int, m: int, frame: BesselFrame, tol: Optional[Tolerance] = None) -> float:
    """Upsilon(n, m) / (J^_m Gamma(n+A/B) B^(n+A/B)); tends to 1 as n grows."""
    nu = frame.order(n)
    log_g, sign_g = log_gamma(nu)
    log_den = log_g + nu * math.log(frame.B)
    scaled = upsilon(n, m, frame, tol) / j_hat(m, frame, tol)
    if abs(log_den) <= _LOG_SWITCH:
        return scaled / (sign_g * math.exp(log_den))
    if scaled == 0.0:
        return 0.0
    sign = math.copysign(1.0, scaled) * sign_g
    return sign * math.exp(math.log(abs(scaled)) - log_den)
