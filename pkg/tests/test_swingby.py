import math

import numpy as np
import pytest

from gtopx import astro


def turning_angle(v_in, v_out):
    c = np.dot(v_in, v_out) / (np.linalg.norm(v_in) * np.linalg.norm(v_out))
    return math.acos(np.clip(c, -1.0, 1.0))


def test_excess_speed_preserved():
    rng = np.random.default_rng(21)
    vpla = np.array([0.0, 29.8, 0.0])
    for _ in range(500):
        vin = rng.normal(0, 5, 3)
        rp = rng.uniform(6000.0, 5e5)
        beta = rng.uniform(-math.pi, math.pi)
        vout = astro.unpowered_swingby(vin, vpla, rp, beta, astro.EARTH)
        assert abs(np.linalg.norm(vout) - np.linalg.norm(vin)) <= 1e-12 * np.linalg.norm(vin)


def test_large_radius_limit():
    vin = np.array([3.0, 4.0, 0.5])
    vout = astro.unpowered_swingby(vin, [0.0, 29.8, 0.0], 1e12, 0.3, astro.EARTH)
    assert np.linalg.norm(vout - vin) <= 1e-6 * np.linalg.norm(vin)


def test_turning_matches_closed_form():
    body = astro.body(astro.EARTH)
    vin = np.array([5.0, 0.0, 0.0])
    rp = 6878.0
    expected = 2 * math.asin(1.0 / (1.0 + rp * 25.0 / body.mu))
    vout = astro.unpowered_swingby(vin, [0.0, 29.8, 0.0], rp, 0.7, body)
    assert turning_angle(vin, vout) == pytest.approx(expected, abs=1e-12)


def test_turning_monotone_in_radius():
    vin = np.array([5.0, 1.0, 0.2])
    vpla = np.array([0.0, 29.8, 0.0])
    radii = np.linspace(6500.0, 2e5, 40)
    angles = [turning_angle(vin, astro.unpowered_swingby(vin, vpla, rp, 0.0, astro.EARTH))
              for rp in radii]
    assert all(a > b for a, b in zip(angles, angles[1:]))


def bisect_rp(vin, vout, alpha, mu, lo=1.0, hi=1e12, iters=300):
    """Independent bisection oracle on the turning-angle equation."""
    def f(rp):
        return (math.asin(mu / (mu + rp * vin * vin))
                + math.asin(mu / (mu + rp * vout * vout)) - alpha)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def test_powered_equal_speeds_no_cost():
    dv, rp = astro.powered_swingby_dv(5.0, 5.0, 1.2, astro.EARTH)
    assert dv == 0.0
    assert rp > 0


def test_powered_matches_bisection_oracle():
    body = astro.body(astro.EARTH)
    dv, rp = astro.powered_swingby_dv(5.0, 6.0, 1.2, body)
    rp_ref = bisect_rp(5.0, 6.0, 1.2, body.mu)
    assert rp == pytest.approx(rp_ref, rel=1e-9)
    dv_ref = abs(math.sqrt(36 + 2 * body.mu / rp_ref) - math.sqrt(25 + 2 * body.mu / rp_ref))
    assert dv == pytest.approx(dv_ref, rel=1e-9)


def test_powered_oracle_property():
    rng = np.random.default_rng(33)
    body = astro.body(astro.VENUS)
    for _ in range(200):
        vin = rng.uniform(1.0, 15.0)
        vout = rng.uniform(1.0, 15.0)
        alpha = rng.uniform(0.01, 3.0)
        dv, rp = astro.powered_swingby_dv(vin, vout, alpha, body)
        rp_ref = bisect_rp(vin, vout, alpha, body.mu)
        assert rp == pytest.approx(rp_ref, rel=1e-9)


def test_powered_zero_turn_clamps_to_body_minimum():
    body = astro.body(astro.EARTH)
    dv, rp = astro.powered_swingby_dv(5.0, 5.0, 0.0, body)
    assert dv == 0.0
    assert rp == body.rp_min
