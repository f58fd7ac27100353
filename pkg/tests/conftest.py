import numpy as np
import pytest

from gtopx import astro


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240817)


def random_elliptic_state(rng, mu=astro.MU_SUN):
    """A well-conditioned random heliocentric elliptic state."""
    from gtopx import _kernels as k

    a = rng.uniform(0.5, 6.0) * astro.AU_KM
    e = rng.uniform(0.0, 0.7)
    inc = rng.uniform(0.0, 0.4)
    raan = rng.uniform(0.0, 2 * np.pi)
    argp = rng.uniform(0.0, 2 * np.pi)
    eanom = rng.uniform(0.0, 2 * np.pi)
    rx, ry, rz, vx, vy, vz = k.elements_to_state(a, e, inc, raan, argp, eanom, mu)
    return astro.StateVector(np.array([rx, ry, rz]), np.array([vx, vy, vz])), a, e
