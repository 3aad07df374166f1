"""
Finite-M checks of the large-M asymptotics used by the generating-function route.

Both sums contain factorials far beyond float range, so every term is carried
as a signed logarithm and combined with ``scipy.special.logsumexp``.
"""
import math
from typing import List

import numpy as np
from scipy import special

from ..errors import FppError
from .params import DiagParams, gf_params


def _log_binomial_row(m: int) -> np.ndarray:
    k = np.arange(m + 1)
    return special.gammaln(m + 1) - special.gammaln(k + 1) - special.gammaln(m - k + 1)


def hat_f(p: DiagParams, i: int, M: int) -> float:
    """
    log F^_i(M), the coefficient sum over 2k + l + m = M of
    (-C)^k / k! * (k+i+g+1)^(rising l) / l! * (m+1) * sum_n binom(m, n) alpha^(m-n) (k+l+n)!.
    """
    if M < 0 or i < 0:
        raise ValueError(f"M and i must be >= 0, got M={M}, i={i}")
    g = p.gamma_hat
    alpha = p.alpha
    log_alpha = math.log(alpha)
    log_c = math.log(gf_params(p).C)
    shift = i + g + 1.0

    logs: List[float] = []
    signs: List[float] = []
    for k in range(M // 2 + 1):
        base = k * log_c - special.gammaln(k + 1)
        k_shift = k + shift
        for l in range(M - 2 * k + 1):
            m = M - 2 * k - l
            n = np.arange(m + 1)
            inner = special.logsumexp(
                _log_binomial_row(m) + (m - n) * log_alpha + special.gammaln(k + l + n + 1)
            )
            logs.append(
                base
                + special.gammaln(k_shift + l) - special.gammaln(k_shift)
                - special.gammaln(l + 1)
                + math.log(m + 1)
                + inner
            )
            signs.append(-1.0 if k % 2 else 1.0)

    value, sign = special.logsumexp(logs, b=signs, return_sign=True)
    if sign <= 0:
        raise FppError(f"F^_{i}({M}) is not positive")
    return float(value)


def hat_f_ratio(p: DiagParams, i: int, M: int) -> float:
    """
    F^_i(M) / (M! M^(g+2+i)), which tends to L_i.

    The m-sum over 2k + l + m = M becomes a Riemann sum for the x-integral in
    L_i, so one more power of M is divided out than the coefficient count of
    the inner binomial sum suggests.
    """
    log_f = hat_f(p, i, M)
    return math.exp(log_f - special.gammaln(M + 1) - (p.gamma_hat + 2.0 + i) * math.log(M))


def scaled_a_sum(m: int, K: float, alpha: float) -> float:
    """
    A_m(K) / ((m+K)! e^(alpha m / (m+K))) with
    A_m(K) = sum_{j=0}^m binom(m, j) alpha^j (m+K-j)!; tends to 1 as m grows.
    """
    if m < 1 or K < 0 or alpha <= 0:
        raise ValueError(f"need m >= 1, K >= 0, alpha > 0; got m={m}, K={K}, alpha={alpha}")
    j = np.arange(m + 1)
    logs = _log_binomial_row(m) + j * math.log(alpha) + special.gammaln(m + K - j + 1)
    log_a = special.logsumexp(logs)
    return math.exp(log_a - special.gammaln(m + K + 1) - alpha * m / (m + K))
