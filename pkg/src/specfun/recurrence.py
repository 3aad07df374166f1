"""
Scaled forward iteration of the three-term recursions behind pi_n = a_n pi_0 - b_n.

Both coefficient sequences grow factorially, so the window of the last three
values is renormalized every step and only log|a_n| and b_n/a_n are kept.
"""
import math
import logging
from typing import Callable, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

logger = logging.getLogger(__name__)

Coefficients = Callable[[int], Tuple[float, float, float]]


class AffineSeq(BaseModel):
    """
    Coefficients of pi_n = a_n * pi_0 - b_n for n = 1..n_max.

    Stored as ratio[n-1] = b_n / a_n and log_a[n-1] = log|a_n|, sign_a[n-1].
    """

    model_config = ConfigDict(frozen=True)

    ratio: List[float]
    log_a: List[float]
    sign_a: List[float]

    @property
    def n_max(self) -> int:
        return len(self.ratio)

    def ratio_at(self, n: int) -> float:
        return self.ratio[n - 1]

    def a(self, n: int) -> float:
        return self.sign_a[n - 1] * math.exp(self.log_a[n - 1])

    def b(self, n: int) -> float:
        return self.ratio_at(n) * self.a(n)


def iterate_scaled(seed_a: Sequence[float], seed_b: Sequence[float],
                   coefficients: Coefficients, n_max: int) -> AffineSeq:
    """
    Run x_n = c1(n) x_{n-1} + c2(n) x_{n-2} + c3(n) x_{n-3} for n >= 4 on both
    sequences, seeded with their values at n = 1, 2, 3.
    """
    if n_max < 3:
        raise ValueError(f"n_max must be >= 3, got {n_max}")
    if len(seed_a) != 3 or len(seed_b) != 3:
        raise ValueError("seeds must hold the values at n = 1, 2, 3")

    ratio = [b / a for a, b in zip(seed_a, seed_b)]
    log_a = [math.log(abs(a)) for a in seed_a]
    sign_a = [math.copysign(1.0, a) for a in seed_a]

    # window values are true values divided by exp(log_scale)
    scale = abs(seed_a[2])
    log_scale = math.log(scale)
    wa = [a / scale for a in seed_a]
    wb = [b / scale for b in seed_b]

    for n in range(4, n_max + 1):
        c1, c2, c3 = coefficients(n)
        a_n = c1 * wa[2] + c2 * wa[1] + c3 * wa[0]
        b_n = c1 * wb[2] + c2 * wb[1] + c3 * wb[0]
        if not (math.isfinite(a_n) and math.isfinite(b_n)) or a_n == 0.0:
            raise OverflowError(f"scaled recursion left the representable range at n={n}")

        ratio.append(b_n / a_n)
        log_a.append(log_scale + math.log(abs(a_n)))
        sign_a.append(math.copysign(1.0, a_n))

        f = abs(a_n)
        wa = [wa[1] / f, wa[2] / f, a_n / f]
        wb = [wb[1] / f, wb[2] / f, b_n / f]
        log_scale += math.log(f)

    logger.debug(f"recursion iterated to n={n_max}, log a_n={log_a[-1]:.3f}")
    return AffineSeq(ratio=ratio, log_a=log_a, sign_a=sign_a)
