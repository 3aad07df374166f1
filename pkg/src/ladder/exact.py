"""
Exact percolation speed on the ladder with horizontal intensity 1 and
vertical intensity lambda.

The front process F_t = N_t - M_t has the lower-Hessenberg generator built by
``build_q_ladder``; its stationary distribution is expressed through Bessel
functions J^_n = J_{n+1+2/lambda}(2/lambda), i.e. the frame (A, B) = (2+lambda, lambda).
"""
import logging
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..errors import RegimeError
from ..models import Method, Model, SpeedResult, StationaryDist
from ..specfun.bessel import Tolerance
from ..specfun.frame import BesselFrame, delta, j_hat
from ..specfun.recurrence import AffineSeq, iterate_scaled

logger = logging.getLogger(__name__)

LAMBDA_MIN = 0.04
LAMBDA_MAX = 1e3


class LadderParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    lam: float = Field(ge=LAMBDA_MIN, le=LAMBDA_MAX)

    @property
    def frame(self) -> BesselFrame:
        return BesselFrame(A=2.0 + self.lam, B=self.lam)


def ladder_params(lam: float) -> LadderParams:
    """LadderParams with a RegimeError naming the supported range."""
    if not LAMBDA_MIN <= lam <= LAMBDA_MAX:
        raise RegimeError(
            f"ladder lambda={lam} outside supported range [{LAMBDA_MIN}, {LAMBDA_MAX:g}]"
        )
    return LadderParams(lam=lam)


def build_q_ladder(p: LadderParams, size: int) -> np.ndarray:
    """Top-left size x size corner of the front-process intensity matrix."""
    if size < 5:
        raise ValueError(f"size must be >= 5, got {size}")
    lam = p.lam
    q = np.zeros((size, size))
    q[0, 0], q[0, 1] = -2.0, 2.0
    for n in range(1, size):
        q[n, : n - 1] = lam
        q[n, n - 1] = 1.0 + lam
        q[n, n] = -2.0 - n * lam
        if n + 1 < size:
            q[n, n + 1] = 1.0
    return q


def _seeds(lam: float) -> Tuple[Tuple[float, ...], Tuple[float, ...]]:
    a = (
        2.0 + lam,
        2 * lam**2 + 7 * lam + 2,
        6 * lam**3 + 26 * lam**2 + 22 * lam + 2,
    )
    b = (
        lam,
        2 * lam**2 + 3 * lam,
        6 * lam**3 + 14 * lam**2 + 6 * lam,
    )
    return a, b


def ab_sequences(p: LadderParams, n_max: int) -> AffineSeq:
    """a_n, b_n from the explicit n = 1, 2, 3 values and the three-term recursion."""
    lam = p.lam
    seed_a, seed_b = _seeds(lam)

    def coefficients(n: int):
        return lam * n + 3.0, -(lam * (n - 2) + 3.0), 1.0

    return iterate_scaled(seed_a, seed_b, coefficients, n_max)


def ab_delta_route(p: LadderParams, n: int, tol: Optional[Tolerance] = None) -> Tuple[float, float]:
    """a_n and b_n as combinations of Delta(n, 1) and Delta(n, 2)."""
    lam = p.lam
    frame = p.frame
    d1 = delta(n, 1, frame, tol)
    d2 = delta(n, 2, frame, tol)
    a = (2 * lam**2 + 8 * lam + 5) / lam * d1 - (lam + 3) / lam * d2
    b = (2 * lam**2 + 4 * lam + 1) / lam * d1 - (lam + 1) / lam * d2
    return a, b


def _j12(p: LadderParams, tol: Optional[Tolerance]) -> Tuple[float, float]:
    return j_hat(1, p.frame, tol), j_hat(2, p.frame, tol)


def pi0_bessel(p: LadderParams, tol: Optional[Tolerance] = None) -> float:
    """Stationary probability of the flat front, lim b_n / a_n."""
    lam = p.lam
    j1, j2 = _j12(p, tol)
    num = (2 * lam**2 + 4 * lam + 1) * j1 - (lam + 1) * j2
    den = (2 * lam**2 + 8 * lam + 5) * j1 - (lam + 3) * j2
    return num / den


def normalizer(p: LadderParams, tol: Optional[Tolerance] = None) -> float:
    """c in pi_n = c (J^_{n-1} - J^_n)."""
    lam = p.lam
    j1, j2 = _j12(p, tol)
    return 2.0 / ((2 * lam**2 + 8 * lam + 5) * j1 - (lam + 3) * j2)


def stationary_ladder(p: LadderParams, K: int, tol: Optional[Tolerance] = None) -> StationaryDist:
    """pi_0..pi_K from the closed form; tail mass c J^_K."""
    if K < 10:
        raise ValueError(f"K must be >= 10, got {K}")
    c = normalizer(p, tol)
    jh = [j_hat(n, p.frame, tol) for n in range(K + 1)]
    probs = [pi0_bessel(p, tol)]
    probs.extend(c * (jh[n - 1] - jh[n]) for n in range(1, K + 1))
    return StationaryDist(probs=probs, tail_bound=max(c * jh[K], 0.0))


def speed_ladder(p: LadderParams, tol: Optional[Tolerance] = None) -> SpeedResult:
    pi0 = pi0_bessel(p, tol)
    return SpeedResult(
        speed=1.0 + pi0,
        pi0=pi0,
        method=Method.EXACT_BESSEL,
        model=Model.LADDER.value,
        lam=p.lam,
    )


def speed_ladder_scaled(horizontal: float, vertical: float,
                        tol: Optional[Tolerance] = None) -> SpeedResult:
    """Ladder with arbitrary intensities; time scales with the horizontal intensity."""
    if horizontal <= 0 or vertical <= 0:
        raise ValueError("intensities must be > 0")
    base = speed_ladder(ladder_params(vertical / horizontal), tol)
    return base.model_copy(update={"speed": horizontal * base.speed})
