import math

import numpy as np
import pytest

from gtopx import astro
from gtopx._tables import EPH_COEF, MU_SUN


def oracle_state(body, mjd2000):
    """Independent elements-to-Cartesian conversion (matrix construction),
    straight-line reimplementation sharing only the coefficient table."""
    if body == 9:
        t = mjd2000 / 36525.0
    else:
        t = (mjd2000 + 36525.0) / 36525.0
    powers = t ** np.arange(6)
    a, e, inc, raan, argp, m = EPH_COEF[body] @ powers
    m = math.fmod(m, 2 * math.pi)
    if m < 0:
        m += 2 * math.pi

    # solve Kepler by plain fixed-point + Newton refinement
    eanom = m
    for _ in range(200):
        eanom = eanom - (eanom - e * math.sin(eanom) - m) / (1 - e * math.cos(eanom))
    rot = (
        np.array([[math.cos(raan), -math.sin(raan), 0],
                  [math.sin(raan), math.cos(raan), 0],
                  [0, 0, 1]])
        @ np.array([[1, 0, 0],
                    [0, math.cos(inc), -math.sin(inc)],
                    [0, math.sin(inc), math.cos(inc)]])
        @ np.array([[math.cos(argp), -math.sin(argp), 0],
                    [math.sin(argp), math.cos(argp), 0],
                    [0, 0, 1]])
    )
    b = a * math.sqrt(1 - e * e)
    n = math.sqrt(MU_SUN / a ** 3)
    pos2d = np.array([a * (math.cos(eanom) - e), b * math.sin(eanom), 0.0])
    fac = 1 - e * math.cos(eanom)
    vel2d = np.array([-a * n * math.sin(eanom) / fac, b * n * math.cos(eanom) / fac, 0.0])
    return rot @ pos2d, rot @ vel2d


def test_earth_at_epoch_is_one_au():
    s = astro.ephemeris(astro.EARTH, 0.0)
    assert np.linalg.norm(s.r) == pytest.approx(1.496e8, rel=0.02)


def test_earth_bound_orbit():
    s = astro.ephemeris(astro.EARTH, 0.0)
    energy = np.dot(s.v, s.v) / 2 - astro.MU_SUN / np.linalg.norm(s.r)
    assert energy < 0


def test_venus_against_independent_oracle():
    s = astro.ephemeris(astro.VENUS, 1000.0)
    r_ref, v_ref = oracle_state(2, 1000.0)
    assert np.linalg.norm(s.r - r_ref) <= 1e-10 * np.linalg.norm(r_ref)
    assert np.linalg.norm(s.v - v_ref) <= 1e-10 * np.linalg.norm(v_ref)


@pytest.mark.parametrize("body", range(1, 10))
def test_all_planets_against_oracle(body):
    for t in (-800.0, 0.0, 1234.5, 7000.0):
        s = astro.ephemeris(body, t)
        r_ref, v_ref = oracle_state(body, t)
        assert np.linalg.norm(s.r - r_ref) <= 1e-9 * np.linalg.norm(r_ref)
        assert np.linalg.norm(s.v - v_ref) <= 1e-9 * np.linalg.norm(v_ref)


def test_targets_have_plausible_orbits():
    tw = astro.ephemeris(astro.TW229, 3600.0)
    assert 1.5 < np.linalg.norm(tw.r) / astro.AU_KM < 3.5
    comet = astro.ephemeris(astro.COMET_67P, 3600.0)
    assert 1.2 < np.linalg.norm(comet.r) / astro.AU_KM < 5.8


def test_deterministic():
    a = astro.ephemeris(astro.MARS, 512.25)
    b = astro.ephemeris(astro.MARS, 512.25)
    assert np.array_equal(a.r, b.r) and np.array_equal(a.v, b.v)


def test_unknown_body():
    with pytest.raises(astro.AstroError, match="unknown body"):
        astro.ephemeris(42, 0.0)
