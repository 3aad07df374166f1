import math

import numpy as np
import pytest
from scipy import special

from src.errors import PoleError
from src.specfun import (
    BesselFrame,
    bessel_j,
    bessel_y,
    upsilon_growth_ratio,
    delta,
    factorial_falling,
    factorial_rising,
    gamma,
    log_gamma,
    upsilon,
)

rng = np.random.default_rng(7)
RANDOM_ORDERS = [(float(nu), float(z)) for nu, z in zip(rng.uniform(0, 10, 20), rng.uniform(0.1, 20, 20))]


def test_gamma_known_values():
    assert gamma(1) == pytest.approx(1.0, rel=1e-15)
    assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert gamma(5.5) == pytest.approx(4.5 * gamma(4.5), rel=1e-13)


@pytest.mark.parametrize("x", np.linspace(0.1, 50, 37).tolist())
def test_gamma_recurrence(x):
    assert gamma(x + 1) == pytest.approx(x * gamma(x), rel=1e-13)


@pytest.mark.parametrize("x", [-2.5, -0.3, -7.01])
def test_gamma_negative_non_integer(x):
    assert gamma(x) == pytest.approx(float(special.gamma(x)), rel=1e-12)


@pytest.mark.parametrize("x", [0, -1, -4])
def test_gamma_poles(x):
    with pytest.raises(PoleError):
        gamma(x)
    with pytest.raises(PoleError):
        log_gamma(x)


def test_gamma_overflow():
    with pytest.raises(OverflowError):
        gamma(200.0)


def test_log_gamma_sign():
    value, sign = log_gamma(-0.5)
    assert sign == -1.0
    assert math.exp(value) == pytest.approx(abs(gamma(-0.5)), rel=1e-13)


def test_factorials():
    assert factorial_rising(3.7, 0) == 1.0
    assert factorial_rising(2.5, 3) == pytest.approx(39.375, rel=1e-15)
    for x, n in [(1.3, 4), (0.25, 7), (2.0, 80)]:
        assert factorial_falling(-x, n) == pytest.approx((-1) ** n * factorial_rising(x, n), rel=1e-12)
    assert factorial_rising(-3.0, 5) == 0.0


def test_bessel_j_small_argument():
    assert bessel_j(0, 1e-10) == pytest.approx(1.0, rel=1e-15)


def test_bessel_j_known_value():
    assert bessel_j(4, 2) == pytest.approx(0.0339957198, abs=1e-10)


def test_bessel_j_recurrence_at_sqrt2():
    r2 = math.sqrt(2.0)
    assert bessel_j(2, r2) == pytest.approx(2 / r2 * bessel_j(1, r2) - bessel_j(0, r2), abs=1e-10)


@pytest.mark.parametrize("nu,z", RANDOM_ORDERS)
def test_bessel_matches_scipy(nu, z):
    assert bessel_j(nu, z) == pytest.approx(float(special.jv(nu, z)), rel=1e-9, abs=1e-11)
    assert bessel_y(nu, z) == pytest.approx(float(special.yv(nu, z)), rel=1e-8, abs=1e-10)


@pytest.mark.parametrize("nu,z", RANDOM_ORDERS)
def test_wronskian(nu, z):
    w = math.pi * (bessel_j(nu + 1, z) * bessel_y(nu, z) - bessel_j(nu, z) * bessel_y(nu + 1, z))
    assert w == pytest.approx(2 / z, rel=1e-8)


@pytest.mark.parametrize("nu,z", RANDOM_ORDERS[:8])
def test_three_term_recurrence(nu, z):
    nu = nu + 1.0
    for f in (bessel_j, bessel_y):
        values = [f(nu - 1, z), f(nu, z), f(nu + 1, z)]
        scale = max(abs(v) for v in values)
        assert abs(values[2] + values[0] - 2 * nu / z * values[1]) <= 1e-8 * scale


@pytest.mark.parametrize("z", [0.3, 1.0, 4.0, 11.5])
def test_bessel_y_half_order(z):
    assert bessel_y(0.5, z) == pytest.approx(-math.sqrt(2 / (math.pi * z)) * math.cos(z), rel=1e-10, abs=1e-14)


@pytest.mark.parametrize("n,z", [(0, 1.5), (1, 2.0), (3, 2.0), (2, 0.7), (6, 3.0)])
def test_bessel_y_integer_order(n, z):
    assert bessel_y(n, z) == pytest.approx(float(special.yn(n, z)), rel=1e-9)


def test_bessel_y_recursion_at_integer_order():
    y2, y3, y4 = bessel_y(2, 2.0), bessel_y(3, 2.0), bessel_y(4, 2.0)
    assert y4 == pytest.approx(3 * y3 - y2, rel=1e-8)


def test_bessel_rejects_bad_arguments():
    with pytest.raises(ValueError):
        bessel_j(-1.0, 1.0)
    with pytest.raises(ValueError):
        bessel_j(1.0, 0.0)
    with pytest.raises(ValueError):
        bessel_y(1.0, -2.0)


FRAME = BesselFrame(A=3.0, B=1.0)


@pytest.mark.parametrize("n", [0, 3, 9])
def test_upsilon_diagonal_and_neighbour(n):
    assert upsilon(n, n, FRAME) == 0.0
    assert upsilon(n + 1, n, FRAME) == pytest.approx(FRAME.B, rel=1e-9)


def test_upsilon_recursion_and_antisymmetry():
    expected = (FRAME.A + 4 * FRAME.B) * upsilon(4, 2, FRAME) - upsilon(3, 2, FRAME)
    assert upsilon(5, 2, FRAME) == pytest.approx(expected, rel=1e-9)
    assert upsilon(2, 5, FRAME) == pytest.approx(-upsilon(5, 2, FRAME), rel=1e-12)


@pytest.mark.parametrize("m", [1, 2, 4])
def test_delta_claims(m):
    A, B = FRAME.A, FRAME.B
    assert delta(m, m, FRAME) == pytest.approx(B, rel=1e-9)
    assert delta(m + 1, m, FRAME) == pytest.approx(B, rel=1e-9)
    assert delta(m + 2, m, FRAME) == pytest.approx((A + B * (m + 1) - 1) * B, rel=1e-9)


def test_delta_recursion():
    A, B, n, m = FRAME.A, FRAME.B, 6, 1
    d = [delta(k, m, FRAME) for k in range(n - 3, n + 1)]
    expected = (1 + A + B * (n - 1)) * d[2] - (1 + A + B * (n - 3)) * d[1] + d[0]
    assert d[3] == pytest.approx(expected, rel=1e-9)


def test_upsilon_growth_ratio_tends_to_one():
    errors = [abs(upsilon_growth_ratio(n, 1, FRAME) - 1.0) for n in (10, 15, 20, 25)]
    assert errors[-1] <= 0.05
    assert all(b < a for a, b in zip(errors, errors[1:]))
