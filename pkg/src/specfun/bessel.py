"""
Bessel functions of real order and positive real argument.

J is summed from the ascending power series; Y is assembled from J of
opposite orders. The intended regime is z = 2/B with moderate z (<= ~50),
where the series is exact to tolerance and terminates provably.
"""
import math
import logging
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy import special

from ..config import settings
from ..errors import ConvergenceError
from .gamma import cospi, sinpi

logger = logging.getLogger(__name__)

# Series accumulate in the widest hardware float available
WIDE = np.longdouble

# Orders closer than this to an integer take the integer branch of Y
INTEGER_ORDER_BAND = 1e-6

# Sample spacing for the integer-order interpolation of Y
INTEGER_ORDER_STEP = 1e-5

_LOG_MAX = 700.0


class Tolerance(BaseModel):
    model_config = ConfigDict(frozen=True)

    rel_eps: float = Field(default_factory=lambda: settings.bessel_rel_eps, gt=0, lt=1)
    max_terms: int = Field(default_factory=lambda: settings.bessel_max_terms, ge=16)


def _default_tol(tol: Optional[Tolerance]) -> Tolerance:
    return tol if tol is not None else Tolerance()


def _leading_term(nu: float, half: float) -> float:
    """(z/2)^nu / Gamma(nu+1), in log space when the parts would overflow."""
    if abs(nu) < 100:
        value = half ** nu * float(special.rgamma(nu + 1.0))
        if math.isfinite(value):
            return value
    log_t = nu * math.log(half) - float(special.gammaln(nu + 1.0))
    sign = float(special.gammasgn(nu + 1.0))
    if log_t > _LOG_MAX:
        raise OverflowError(f"J series leading term overflows (nu={nu}, z={2 * half})")
    if log_t < -_LOG_MAX:
        return 0.0
    return sign * math.exp(log_t)


def _j_series(nu: float, z: float, tol: Tolerance) -> float:
    """Ascending series for J_nu(z), any real nu, z > 0."""
    if nu < 0 and nu == math.floor(nu):
        # J_{-n} = (-1)^n J_n
        n = int(-nu)
        value = _j_series(float(n), z, tol)
        return -value if n % 2 else value

    half = z / 2.0
    t0 = _leading_term(nu, half)
    if t0 == 0.0:
        logger.debug(f"J_{nu}({z}) underflows to zero")
        return 0.0

    q = -WIDE(half) * WIDE(half)
    nu_w = WIDE(nu)
    term = WIDE(t0)
    total = WIDE(0.0)
    comp = WIDE(0.0)
    recent: List[float] = []

    for k in range(tol.max_terms):
        # Kahan compensated accumulation
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t

        denom = WIDE(k + 1) * (WIDE(k + 1) + nu_w)
        ratio = q / denom
        nxt = term * ratio
        # Stop only past every pole of 1/Gamma(nu+k+1) and on the decreasing tail
        if (k + 1 + nu > 0 and abs(ratio) < 1
                and abs(nxt) <= WIDE(tol.rel_eps) * abs(total)):
            logger.debug(f"J_{nu}({z}) converged after {k + 1} terms")
            return float(total)
        term = nxt
        recent = (recent + [float(term)])[-4:]

    raise ConvergenceError(
        f"J_{nu}({z}) series did not converge",
        terms=tol.max_terms, partial_sum=float(total), last_terms=recent,
    )


def bessel_j(nu: float, z: float, tol: Optional[Tolerance] = None) -> float:
    """Bessel function of the first kind J_nu(z) for nu >= 0, z > 0."""
    if nu < 0:
        raise ValueError(f"order must be >= 0, got {nu}")
    if z <= 0:
        raise ValueError(f"argument must be > 0, got {z}")
    return _j_series(float(nu), float(z), _default_tol(tol))


def _y_noninteger(nu: float, z: float, tol: Tolerance) -> float:
    jp = _j_series(nu, z, tol)
    jm = _j_series(-nu, z, tol)
    return (jp * cospi(nu) - jm) / sinpi(nu)


def bessel_y(nu: float, z: float, tol: Optional[Tolerance] = None) -> float:
    """
    Bessel function of the second kind Y_nu(z), z > 0.

    Non-integer orders use Y = (J_nu cos(nu pi) - J_-nu) / sin(nu pi). Orders
    within 1e-6 of an integer n are evaluated by symmetric four-point
    interpolation from n +/- 1e-5 and n +/- 2e-5, which is exact to O(1e-20)
    in the order and keeps the sin(nu pi) cancellation mild.
    """
    if z <= 0:
        raise ValueError(f"argument must be > 0, got {z}")
    tol = _default_tol(tol)
    nu = float(nu)
    z = float(z)
    n = round(nu)
    if abs(nu - n) >= INTEGER_ORDER_BAND:
        return _y_noninteger(nu, z, tol)

    h = INTEGER_ORDER_STEP
    nodes = [n - 2 * h, n - h, n + h, n + 2 * h]
    values = [_y_noninteger(x, z, tol) for x in nodes]
    # Lagrange weights at nu
    out = 0.0
    for i, (xi, yi) in enumerate(zip(nodes, values)):
        w = 1.0
        for j, xj in enumerate(nodes):
            if j != i:
                w *= (nu - xj) / (xi - xj)
        out += w * yi
    return out
