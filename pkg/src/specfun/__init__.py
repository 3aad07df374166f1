from .gamma import gamma, log_gamma, factorial_rising, factorial_falling
from .bessel import Tolerance, bessel_j, bessel_y
from .frame import BesselFrame, j_hat, y_hat, upsilon, delta, upsilon_growth_ratio

__all__ = [
    "gamma", "log_gamma", "factorial_rising", "factorial_falling",
    "Tolerance", "bessel_j", "bessel_y",
    "BesselFrame", "j_hat", "y_hat", "upsilon", "delta", "upsilon_growth_ratio",
]
