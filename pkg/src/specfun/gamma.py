import math
import logging
from typing import Tuple

from scipy import special

from ..errors import PoleError

logger = logging.getLogger(__name__)

# Above this the direct product gives way to Gamma ratios
PRODUCT_LIMIT = 64


def _is_pole(x: float) -> bool:
    return x <= 0 and x == math.floor(x)


def sinpi(x: float) -> float:
    """sin(pi*x) with the argument reduced exactly before multiplying by pi."""
    n = round(x)
    frac = x - n
    s = math.sin(math.pi * frac)
    return -s if n % 2 else s


def cospi(x: float) -> float:
    """cos(pi*x) with exact argument reduction."""
    n = round(x)
    frac = x - n
    c = math.cos(math.pi * frac)
    return -c if n % 2 else c


def gamma(x: float) -> float:
    """
    Gamma function for real x.

    Uses the reflection formula below 1/2, so that accuracy near the negative
    poles is governed by sin(pi*x) with exact argument reduction.

    Raises:
        PoleError: x is a non-positive integer.
        OverflowError: the result is not representable.
    """
    x = float(x)
    if _is_pole(x):
        raise PoleError(f"Gamma has a pole at x={x}")
    if x < 0.5:
        value = math.pi / (sinpi(x) * float(special.gamma(1.0 - x)))
    else:
        value = float(special.gamma(x))
    if math.isinf(value):
        raise OverflowError(f"Gamma({x}) overflows")
    return value


def log_gamma(x: float) -> Tuple[float, float]:
    """Return (log|Gamma(x)|, sign of Gamma(x))."""
    x = float(x)
    if _is_pole(x):
        raise PoleError(f"Gamma has a pole at x={x}")
    return float(special.gammaln(x)), float(special.gammasgn(x))


def rgamma(x: float) -> float:
    """1/Gamma(x), zero at the poles."""
    return float(special.rgamma(x))


def factorial_rising(x: float, n: int) -> float:
    """x(x+1)...(x+n-1)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    # at non-positive integer x the Gamma ratio is 0/0 or inf/inf; the product is exact
    if n <= PRODUCT_LIMIT or _is_pole(x):
        out = 1.0
        for k in range(n):
            out *= x + k
        return out
    value = float(special.poch(x, n))
    if math.isinf(value):
        raise OverflowError(f"rising factorial ({x})^({n}) overflows")
    return value


def factorial_falling(x: float, n: int) -> float:
    """x(x-1)...(x-n+1)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n <= PRODUCT_LIMIT:
        out = 1.0
        for k in range(n):
            out *= x - k
        return out
    sign = -1.0 if n % 2 else 1.0
    return sign * factorial_rising(-x, n)
