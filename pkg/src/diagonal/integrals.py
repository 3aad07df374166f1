"""
Integral and series ingredients of the generating-function route.

I(n) = int_0^1 (1-x)^(g+n) x e^(a x) dx and J(n) = int_0^1 (1-x)^(g+n) e^(a x) dx,
with g = gamma_hat in (-1, 0] and a = alpha in (0, 1/2], feed the limits L_i of the
normalized coefficient sequences; the S-sums collect the remaining double series.
"""
import math
import logging
from typing import List, Tuple

from scipy import integrate

from ..errors import ConvergenceError
from ..specfun.bessel import bessel_j
from ..specfun.gamma import factorial_falling, rgamma
from .params import DiagParams, exp_weight, gf_params

logger = logging.getLogger(__name__)

SERIES_EPS = 1e-17
MAX_TERMS = 400


def _sum_until_small(first: float, ratio_at, what: str) -> float:
    """Sum a positive series term_{m+1} = term_m * ratio_at(m)."""
    terms = [first]
    term = first
    for m in range(MAX_TERMS):
        term *= ratio_at(m)
        terms.append(term)
        if term <= SERIES_EPS * terms[0]:
            return math.fsum(terms)
    raise ConvergenceError(f"{what} series did not converge", terms=len(terms),
                           partial_sum=math.fsum(terms), last_terms=terms[-4:])


def ij_integrals(p: DiagParams, n: int) -> Tuple[float, float]:
    """
    (I(n), J(n)) from the Beta-function series.

    With a = g + n + 1, expanding e^(alpha x) gives
    J(n) = sum_m alpha^m / (a (a+1) ... (a+m)) and
    I(n) = sum_m (m+1) alpha^m / (a (a+1) ... (a+m+1)); all terms are positive.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    alpha = p.alpha
    a = p.gamma_hat + n + 1.0

    j_val = _sum_until_small(1.0 / a, lambda m: alpha / (a + m + 1.0), "J(n)")

    # w_m = alpha^m / (a ... (a+m+1)); I sums (m+1) w_m
    w = 1.0 / (a * (a + 1.0))
    terms = [w]
    for m in range(1, MAX_TERMS):
        w *= alpha / (a + m + 1.0)
        terms.append((m + 1) * w)
        if terms[-1] <= SERIES_EPS * terms[0]:
            break
    else:
        raise ConvergenceError("I(n) series did not converge", terms=len(terms),
                               partial_sum=math.fsum(terms), last_terms=terms[-4:])
    return math.fsum(terms), j_val


def ij_closed_form(p: DiagParams, n: int) -> Tuple[float, float]:
    """
    (I(n), J(n)) from I(0), J(0) by the partial-integration closed forms.

    Cancellation grows like Gamma(n)/alpha^n; use for small n only.
    """
    g = p.gamma_hat
    alpha = p.alpha
    i0, j0 = ij_integrals(p, 0)

    j_n = factorial_falling(g + n, n) / alpha**n * j0 - (1.0 / alpha) * math.fsum(
        factorial_falling(g + n, k) / alpha**k for k in range(n)
    )
    tail = math.fsum((n + 1 - m) * alpha**m * rgamma(g + 1.0 + m) for m in range(1, n + 1))
    i_n = math.gamma(g + n + 1.0) / alpha**n * (
        (i0 - n / alpha * j0) * rgamma(g + 1.0) + tail / alpha**2
    )
    return i_n, j_n


def ij_quadrature(p: DiagParams, n: int) -> Tuple[float, float]:
    """
    (I(n), J(n)) by adaptive quadrature after u = (1-x)^(g+1), which removes
    the endpoint singularity.
    """
    g1 = p.gamma_hat + 1.0
    alpha = p.alpha

    def x_of(u: float) -> float:
        return 1.0 - u ** (1.0 / g1)

    def i_integrand(u: float) -> float:
        x = x_of(u)
        return (1.0 - x) ** n * x * math.exp(alpha * x) / g1

    def j_integrand(u: float) -> float:
        x = x_of(u)
        return (1.0 - x) ** n * math.exp(alpha * x) / g1

    i_val, _ = integrate.quad(i_integrand, 0.0, 1.0, epsabs=1e-14, epsrel=1e-13, limit=200)
    j_val, _ = integrate.quad(j_integrand, 0.0, 1.0, epsabs=1e-14, epsrel=1e-13, limit=200)
    return i_val, j_val


def bessel_corrections(p: DiagParams) -> Tuple[float, float]:
    """
    The two Bessel terms split off S(1) and S(2):
    b1 = 2^(-(1+g)/2) alpha^(-g) J_{1+g}(2 sqrt2 alpha),
    b2 = 2^(-1-g/2) alpha^(-g) J_{2+g}(2 sqrt2 alpha).
    """
    g = p.gamma_hat
    alpha = p.alpha
    z = 2.0 * math.sqrt(2.0) * alpha
    scale = alpha ** (-g)
    b1 = 2.0 ** (-(1.0 + g) / 2.0) * scale * bessel_j(1.0 + g, z)
    b2 = 2.0 ** (-1.0 - g / 2.0) * scale * bessel_j(2.0 + g, z)
    return b1, b2


def _inner_sums(p: DiagParams, m_start: int) -> List[float]:
    """inner_j = sum_{m >= m_start} (-2 alpha^2)^m / (Gamma(m+1+g) Gamma(m+1+j))."""
    g = p.gamma_hat
    x = -2.0 * p.alpha**2
    out: List[float] = []
    for j in range(MAX_TERMS):
        lead = x**m_start * rgamma(m_start + 1.0 + g) * rgamma(m_start + 1.0 + j)
        terms = [lead]
        term = lead
        m = m_start
        while abs(term) > SERIES_EPS * abs(lead) and lead != 0.0:
            term *= x / ((m + 1.0 + g) * (m + 1.0 + j))
            terms.append(term)
            m += 1
        out.append(math.fsum(terms))
        # outer weight (2 alpha)^j makes the j-series factorially convergent
        if j > 2 and abs(out[-1]) * (2 * p.alpha) ** j * (j + 2) < 1e-18 * max(abs(out[0]), 1e-300):
            return out
    raise ConvergenceError("S inner sums did not converge", terms=MAX_TERMS)


def _script_s_parts(p: DiagParams, m_start: int) -> Tuple[float, float]:
    """(P, Q) with script_S(k) = P + k Q for the given inner starting index."""
    inner = _inner_sums(p, m_start)
    w = -2.0 * p.alpha
    pv = math.fsum(w**j * (j + 1) * s for j, s in enumerate(inner))
    qv = math.fsum(w**j * s for j, s in enumerate(inner))
    return pv, qv


def script_s(p: DiagParams, k: float) -> float:
    """script_S(k) = sum_j (-2 alpha)^j (j+1+k) inner_j, inner sum from m = 1."""
    pv, qv = _script_s_parts(p, 1)
    return pv + k * qv


def script_s_lambda(p: DiagParams) -> float:
    """script_S_lambda, the inner sum extended to m = 0 and evaluated at k = alpha."""
    pv, qv = _script_s_parts(p, 0)
    return pv + p.alpha * qv


def script_s_lambda0() -> float:
    """Bessel resummation of script_S_lambda at lambda = 0: (J_0(sqrt2) - sqrt2 J_1(sqrt2)) / 2."""
    r2 = math.sqrt(2.0)
    return 0.5 * (bessel_j(0.0, r2) - r2 * bessel_j(1.0, r2))


def s_sums(p: DiagParams) -> Tuple[float, float, float, float]:
    """(S(0), S(1), S(2), script_S_lambda)."""
    pv, qv = _script_s_parts(p, 1)
    b1, b2 = bessel_corrections(p)
    s0 = pv
    s1 = b1 + pv + qv
    s2 = 2.0 * b1 + b2 + pv + 2.0 * qv
    return s0, s1, s2, script_s_lambda(p)


def s_direct(p: DiagParams, i: int) -> float:
    """S(i) as the raw double sum over k >= 0, 1 <= m <= k+i."""
    g = p.gamma_hat
    alpha = p.alpha
    total: List[float] = []
    for k in range(MAX_TERMS):
        lead = (-2.0 * alpha) ** k / math.factorial(k)
        block = [
            lead * alpha**m * (k + i + 1 - m) * rgamma(g + 1.0 + m)
            for m in range(1, k + i + 1)
        ]
        total.extend(block)
        block_abs = math.fsum(abs(b) for b in block)
        if k > 3 and block_abs < SERIES_EPS * max(abs(math.fsum(total)), 1e-300):
            return math.fsum(total)
    raise ConvergenceError(f"S({i}) double sum did not converge", terms=MAX_TERMS)


def l_limits(p: DiagParams) -> Tuple[float, float, float]:
    """L_0, L_1, L_2 from the assembled form in I(0), J(0) and S(i)."""
    alpha = p.alpha
    i0, j0 = ij_integrals(p, 0)
    weight = exp_weight(p)
    s = s_sums(p)[:3]
    return tuple(
        alpha ** (-i) * (
            weight * (i0 + 2.0 * j0) - i * weight * j0 / alpha + s[i] / alpha**2
        )
        for i in range(3)
    )


def l_limits_direct(p: DiagParams) -> Tuple[float, float, float]:
    """L_i = sum_k (-C)^k I(k+i) / (k! Gamma(k+1+g+i)), with I from the Beta series."""
    g = p.gamma_hat
    C = gf_params(p).C
    out = []
    for i in range(3):
        terms = []
        for k in range(MAX_TERMS):
            i_val, _ = ij_integrals(p, k + i)
            term = (-C) ** k / math.factorial(k) * i_val * rgamma(k + 1.0 + g + i)
            terms.append(term)
            if k > 2 and abs(term) < SERIES_EPS * abs(math.fsum(terms)):
                break
        out.append(math.fsum(terms))
    return tuple(out)
