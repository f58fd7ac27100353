"""Two-body astrodynamics interface: ephemerides, Kepler propagation,
Lambert transfers and gravity-assist mechanics.

All functions are pure, reentrant and deterministic; vectors are plain numpy
arrays in km and km/s, epochs are days since 1 Jan 2000 (mjd2000).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels as _k
from ._tables import (
    AU_KM,
    BODY_MU,
    BODY_NAMES,
    BODY_RADIUS,
    BODY_RPMIN,
    EPH_COEF,
    MU_SUN,
    TARGET_ELEMS,
    TARGET_IDS,
    TARGET_NAMES,
)

__all__ = [
    "AU_KM",
    "MU_SUN",
    "AstroError",
    "Body",
    "Epoch",
    "StateVector",
    "BODIES",
    "MERCURY", "VENUS", "EARTH", "MARS", "JUPITER", "SATURN",
    "URANUS", "NEPTUNE", "PLUTO", "TW229", "COMET_67P",
    "body",
    "ephemeris",
    "solve_kepler",
    "propagate",
    "lambert",
    "unpowered_swingby",
    "powered_swingby_dv",
]


class AstroError(RuntimeError):
    """Raised when a kernel cannot produce a valid result."""


@dataclass(frozen=True)
class Epoch:
    """An instant expressed in days since 1 Jan 2000."""

    mjd2000: float


@dataclass(frozen=True)
class StateVector:
    """Heliocentric position (km) and velocity (km/s)."""

    r: np.ndarray
    v: np.ndarray


@dataclass(frozen=True)
class Body:
    """A gravitating fly-by or target body."""

    id: int
    name: str
    mu: float        # km^3/s^2
    radius: float    # km
    rp_min: float    # km, minimum safe fly-by pericenter


MERCURY, VENUS, EARTH, MARS, JUPITER, SATURN, URANUS, NEPTUNE, PLUTO = range(1, 10)
TW229 = 10
COMET_67P = 11

BODIES: dict[int, Body] = {
    i: Body(i, BODY_NAMES[i], float(BODY_MU[i]), float(BODY_RADIUS[i]), float(BODY_RPMIN[i]))
    for i in range(1, 10)
}
for _tid in TARGET_IDS:
    BODIES[_tid] = Body(_tid, TARGET_NAMES[_tid], 0.0, 0.0, 0.0)


def body(ident: int | Body) -> Body:
    """Look up a body by id (returns Body instances unchanged)."""
    if isinstance(ident, Body):
        return ident
    try:
        return BODIES[int(ident)]
    except (KeyError, ValueError):
        raise AstroError(f"unknown body: {ident!r}") from None


def _epoch_value(t: Epoch | float) -> float:
    return t.mjd2000 if isinstance(t, Epoch) else float(t)


def ephemeris(b: int | Body, t: Epoch | float) -> StateVector:
    """Heliocentric ecliptic state of a planet or mission target at t."""
    bid = body(b).id
    rx, ry, rz, vx, vy, vz, status = _k.ephemeris(
        bid, _epoch_value(t), EPH_COEF, TARGET_ELEMS, MU_SUN
    )
    if status != _k.OK:
        raise AstroError("unknown body")
    return StateVector(np.array([rx, ry, rz]), np.array([vx, vy, vz]))


def solve_kepler(mean_anomaly: float, ecc: float) -> float:
    """Eccentric (e < 1) or hyperbolic (e > 1) anomaly for a mean anomaly.

    The returned anomaly satisfies its defining equation to 1e-12.
    """
    if ecc < 0.0:
        raise AstroError("eccentricity must be non-negative")
    if ecc < 1.0:
        anom, status = _k.kepler_elliptic(mean_anomaly, ecc)
    else:
        anom, status = _k.kepler_hyperbolic(mean_anomaly, ecc)
    if status != _k.OK:
        raise AstroError(f"Kepler iteration failed at M={mean_anomaly!r}, e={ecc!r}")
    return anom


def propagate(s: StateVector, dt: float, mu: float = MU_SUN) -> StateVector:
    """State advanced dt seconds along its osculating conic."""
    rx, ry, rz, vx, vy, vz, status = _k.propagate_state(
        s.r[0], s.r[1], s.r[2], s.v[0], s.v[1], s.v[2], float(dt), mu
    )
    if status == _k.ERR_DEGENERATE:
        raise AstroError("degenerate conic")
    if status != _k.OK:
        raise AstroError("propagation failed to converge")
    return StateVector(np.array([rx, ry, rz]), np.array([vx, vy, vz]))


def lambert(r1, r2, tof: float, mu: float = MU_SUN,
            direction: str = "prograde") -> tuple[np.ndarray, np.ndarray]:
    """Velocities of the single-revolution transfer from r1 to r2 in tof seconds."""
    if direction not in ("prograde", "retrograde"):
        raise ValueError("direction must be 'prograde' or 'retrograde'")
    if tof <= 0.0:
        raise AstroError("time of flight must be positive")
    r1 = np.asarray(r1, dtype=float)
    r2 = np.asarray(r2, dtype=float)
    v1x, v1y, v1z, v2x, v2y, v2z, status = _k.lambert(
        r1[0], r1[1], r1[2], r2[0], r2[1], r2[2], float(tof), mu,
        direction == "retrograde",
    )
    if status == _k.ERR_COLLINEAR:
        raise AstroError("ill-conditioned transfer")
    if status != _k.OK:
        raise AstroError("Lambert iteration failed to converge")
    return np.array([v1x, v1y, v1z]), np.array([v2x, v2y, v2z])


def unpowered_swingby(v_rel_in, v_planet, rp: float, beta: float,
                      b: int | Body) -> np.ndarray:
    """Outgoing v-infinity vector of an unpowered fly-by.

    ``v_rel_in`` is the incoming planetocentric excess velocity and
    ``v_planet`` the body's heliocentric velocity, which anchors the b-plane
    frame (i along v-infinity, j along i x v_planet, k = i x j); ``beta``
    rotates the outgoing asymptote around that frame.
    """
    bb = body(b)
    v_rel_in = np.asarray(v_rel_in, dtype=float)
    v_planet = np.asarray(v_planet, dtype=float)
    ox, oy, oz = _k.unpowered_swingby(
        v_rel_in[0], v_rel_in[1], v_rel_in[2],
        v_planet[0], v_planet[1], v_planet[2],
        float(rp), float(beta), bb.mu,
    )
    return np.array([ox, oy, oz])


def powered_swingby_dv(vin_mag: float, vout_mag: float, alpha: float,
                       b: int | Body) -> tuple[float, float]:
    """Pericenter burn and radius matching given fly-by asymptote speeds.

    Solves the turning-angle equation for the pericenter radius shared by
    the incoming and outgoing hyperbolas, then prices the speed change at
    that pericenter.  Returns (dv km/s, rp km).
    """
    bb = body(b)
    if vin_mag <= 0.0 or vout_mag <= 0.0:
        raise AstroError("asymptote speeds must be positive")
    dv, rp = _k.powered_swingby(float(vin_mag), float(vout_mag), float(alpha),
                                bb.mu, bb.rp_min)
    return float(dv), float(rp)
