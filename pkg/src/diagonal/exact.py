"""
Exact percolation speed on the ladder with diagonals.

Horizontal and both diagonal edges have intensity 1, vertical edges lambda.
The front process advances at rate 4 from the flat state and 2 otherwise, so
the speed is 2 (1 + pi_0). pi_0 is the limit of d_n / c_n, evaluated in
closed form through the generating function of the normalized coefficients.
"""
import math
import logging
from typing import Optional, Tuple

import numpy as np

from ..errors import FppError
from ..models import Method, Model, SpeedResult
from ..specfun.bessel import Tolerance, bessel_j
from ..specfun.recurrence import AffineSeq, iterate_scaled
from .integrals import bessel_corrections, l_limits, script_s_lambda, script_s_lambda0
from .params import DiagParams, diag_params, exp_weight, gf_params

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2.0)


class CDSeq(AffineSeq):
    """pi_n = c_n pi_0 - d_n; ``ratio_at(n)`` is d_n / c_n."""

    def c(self, n: int) -> float:
        return self.a(n)

    def d(self, n: int) -> float:
        return self.b(n)


def build_q_diagonal(p: DiagParams, size: int) -> np.ndarray:
    """Top-left size x size corner of the front-process intensity matrix."""
    if size < 5:
        raise ValueError(f"size must be >= 5, got {size}")
    lam = p.lam
    q = np.zeros((size, size))
    q[0, 0], q[0, 1] = -4.0, 4.0
    q[1, 0], q[1, 1], q[1, 2] = 2.0 + lam, -4.0 - lam, 2.0
    for n in range(2, size):
        q[n, 0] = 1.0 + lam
        q[n, 1: n - 1] = 2.0 + lam
        q[n, n - 1] = 3.0 + lam
        q[n, n] = -(2.0 * n + 2.0) - n * lam
        if n + 1 < size:
            q[n, n + 1] = 2.0
    return q


def _seeds(lam: float) -> Tuple[Tuple[float, ...], Tuple[float, ...]]:
    c = (
        5.0 + lam,
        28 + 17 * lam + 2 * lam**2,
        226 + 226 * lam + 68 * lam**2 + 6 * lam**3,
    )
    d = (
        1.0 + lam,
        8 + 9 * lam + 2 * lam**2,
        66 + 98 * lam + 44 * lam**2 + 6 * lam**3,
    )
    return c, d


def cd_sequences(p: DiagParams, n_max: int) -> CDSeq:
    """c_n, d_n from the explicit n = 1, 2, 3 values and the three-term recursion."""
    s = 2.0 + p.lam
    seed_c, seed_d = _seeds(p.lam)

    def coefficients(n: int):
        return s * n + 3.0, -(s * (n - 2) + 4.0), 2.0

    seq = iterate_scaled(seed_c, seed_d, coefficients, n_max)
    return CDSeq(ratio=seq.ratio, log_a=seq.log_a, sign_a=seq.sign_a)


def _fraction_parts(p: DiagParams, s_lambda: float) -> Tuple[float, float]:
    alpha = p.alpha
    b1, b2 = bessel_corrections(p)
    num = (2.0 * alpha - 1.0) * exp_weight(p) + alpha * b1 + s_lambda
    return num, num + 4.0 * alpha * b2


def pi0_diagonal(p: DiagParams) -> float:
    """
    Stationary probability of the flat front, lim d_n / c_n.

    At lambda = 0 the outer series of script_S_lambda alternates with unit
    ratio 2 alpha, so its Bessel resummation is used there.
    """
    s_lambda = script_s_lambda0() if p.lam == 0.0 else script_s_lambda(p)
    num, den = _fraction_parts(p, s_lambda)
    if den <= 0.0:
        raise FppError(f"limiting fraction has non-positive denominator {den!r} at lambda={p.lam}")
    return num / den


def pi0_from_limits(p: DiagParams) -> float:
    """pi_0 as sum R*_i L_i / sum R^_i L_i, using the assembled L_i."""
    gf = gf_params(p)
    ls = l_limits(p)
    num = math.fsum(r * l for r, l in zip(gf.R_star, ls))
    den = math.fsum(r * l for r, l in zip(gf.R_hat, ls))
    return num / den


def pi0_general_at_zero() -> float:
    """The general fraction at lambda = 0 with S_0 from its Bessel resummation."""
    num, den = _fraction_parts(DiagParams(lam=0.0), script_s_lambda0())
    return num / den


def pi0_lambda0(tol: Optional[Tolerance] = None) -> float:
    """(J_0 - J_1/sqrt2) / (-J_0 + 3 J_1/sqrt2), Bessel functions at sqrt2."""
    j0 = bessel_j(0.0, SQRT2, tol)
    j1 = bessel_j(1.0, SQRT2, tol)
    return (j0 - j1 / SQRT2) / (-j0 + 3.0 * j1 / SQRT2)


def sigma_lambda0(tol: Optional[Tolerance] = None) -> float:
    """Time constant at lambda = 0: 3/4 - J_0(sqrt2) / (2 sqrt2 J_1(sqrt2))."""
    j0 = bessel_j(0.0, SQRT2, tol)
    j1 = bessel_j(1.0, SQRT2, tol)
    return 0.75 - j0 / (2.0 * SQRT2 * j1)


def speed_diagonal(p: DiagParams) -> SpeedResult:
    pi0 = pi0_diagonal(p)
    logger.debug(f"diagonal lambda={p.lam}: pi0={pi0:.15g}")
    return SpeedResult(
        speed=2.0 * (1.0 + pi0),
        pi0=pi0,
        method=Method.EXACT_GF,
        model=Model.DIAGONAL.value,
        lam=p.lam,
    )


def speed_diagonal_scaled(horizontal: float, vertical: float) -> SpeedResult:
    """
    Diagonal ladder whose horizontal and diagonal edges share one intensity;
    time scales with that intensity. A zero vertical intensity is allowed.
    """
    if horizontal <= 0 or vertical < 0:
        raise ValueError("horizontal intensity must be > 0 and vertical >= 0")
    base = speed_diagonal(diag_params(vertical / horizontal))
    return base.model_copy(update={"speed": horizontal * base.speed})
