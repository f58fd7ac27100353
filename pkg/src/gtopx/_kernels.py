"""Compiled two-body astrodynamics kernels and trajectory-model evaluators.

Everything here is ``numba.njit`` compiled, allocation-light and free of
global mutable state: a kernel's output depends only on its arguments, so
evaluations are reentrant and bit-reproducible from any number of threads.
Constant tables (ephemeris coefficients, gravitational parameters, radii) are
always passed in as read-only arrays rather than captured as globals, which
keeps the on-disk compilation cache valid if the data files change.

Units: km, km/s, seconds inside the kernels.  The decision vectors of the
benchmark instances carry days; conversion happens at the model layer below.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit, prange

DAY = 86400.0

# ---------------------------------------------------------------------------
# status codes (0 = success).  Model evaluators encode the failing leg into
# the status as  status = code + 100 * leg_index.
# ---------------------------------------------------------------------------
OK = 0
ERR_BODY = 1          # unknown body identifier
ERR_TOF = 2           # non-positive time of flight
ERR_COLLINEAR = 3     # lambert endpoints do not define a transfer plane
ERR_LAMBERT = 4       # lambert iteration failed to converge
ERR_DEGENERATE = 5    # rectilinear conic, |h| below tolerance
ERR_PROPAGATE = 6     # universal Kepler iteration failed
ERR_KEPLER = 7        # Kepler solver failed (treated as a defect)
ERR_SEQUENCE = 8      # invalid fly-by planet choice

# arrival modes of the powered swing-by model
ARR_INSERTION = 1
ARR_IMPACT = 2

# arrival modes of the deep-space-maneuver model
DSM_RENDEZVOUS = 1
DSM_DISTANCE = 2


@njit(cache=True)
def _cross(ax, ay, az, bx, by, bz):
    return ay * bz - az * by, az * bx - ax * bz, ax * by - ay * bx


@njit(cache=True)
def _dot(ax, ay, az, bx, by, bz):
    return ax * bx + ay * by + az * bz


@njit(cache=True)
def _norm(ax, ay, az):
    return math.sqrt(ax * ax + ay * ay + az * az)


# ---------------------------------------------------------------------------
# Kepler's equation
# ---------------------------------------------------------------------------

@njit(cache=True)
def kepler_elliptic(mean_anom, ecc):
    """Solve E - e sin E = M for the elliptic branch (0 <= e < 1).

    Returns (E, status).  Newton iteration with a bisection fallback; the
    residual is driven below 1e-13 on the principal interval.
    """
    two_pi = 2.0 * math.pi
    m = mean_anom % two_pi
    rev = mean_anom - m
    if ecc < 1e-14 or m == 0.0:
        return mean_anom, OK

    # Danby-style starter
    e_anom = m + 0.85 * ecc * math.copysign(1.0, math.sin(m))
    for _ in range(100):
        s = math.sin(e_anom)
        f = e_anom - ecc * s - m
        if abs(f) <= 1e-13:
            return e_anom + rev, OK
        fp = 1.0 - ecc * math.cos(e_anom)
        e_anom -= f / fp

    # bisection fallback: f is monotone increasing, root in [m - e, m + e]
    lo = m - ecc
    hi = m + ecc
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        f = mid - ecc * math.sin(mid) - m
        if abs(f) <= 1e-13:
            return mid + rev, OK
        if f > 0.0:
            hi = mid
        else:
            lo = mid
    mid = 0.5 * (lo + hi)
    if abs(mid - ecc * math.sin(mid) - m) <= 1e-12:
        return mid + rev, OK
    return mid + rev, ERR_KEPLER


@njit(cache=True)
def kepler_hyperbolic(mean_anom, ecc):
    """Solve e sinh H - H = M for the hyperbolic branch (e > 1).

    Returns (H, status).
    """
    # starter: invert the dominant sinh term
    h_anom = math.asinh(mean_anom / ecc)
    for _ in range(100):
        sh = math.sinh(h_anom)
        f = ecc * sh - h_anom - mean_anom
        if abs(f) <= 1e-13 * max(1.0, abs(mean_anom)):
            return h_anom, OK
        fp = ecc * math.cosh(h_anom) - 1.0
        h_anom -= f / fp

    # safeguarded bisection on a bracket grown around the root
    span = 1.0 + abs(h_anom)
    lo = h_anom - span
    hi = h_anom + span
    for _ in range(200):
        flo = ecc * math.sinh(lo) - lo - mean_anom
        fhi = ecc * math.sinh(hi) - hi - mean_anom
        if flo <= 0.0 and fhi >= 0.0:
            break
        lo -= span
        hi += span
        span *= 2.0
    for _ in range(300):
        mid = 0.5 * (lo + hi)
        f = ecc * math.sinh(mid) - mid - mean_anom
        if abs(f) <= 1e-13 * max(1.0, abs(mean_anom)):
            return mid, OK
        if f > 0.0:
            hi = mid
        else:
            lo = mid
    mid = 0.5 * (lo + hi)
    if abs(ecc * math.sinh(mid) - mid - mean_anom) <= 1e-12 * max(1.0, abs(mean_anom)):
        return mid, OK
    return mid, ERR_KEPLER


# ---------------------------------------------------------------------------
# orbital elements -> cartesian state
# ---------------------------------------------------------------------------

@njit(cache=True)
def elements_to_state(a, ecc, inc, raan, argp, e_anom, mu):
    """Heliocentric state from elliptic elements and eccentric anomaly."""
    b = a * math.sqrt(1.0 - ecc * ecc)
    n = math.sqrt(mu / (a * a * a))
    ce = math.cos(e_anom)
    se = math.sin(e_anom)

    # perifocal position and velocity
    xp = a * (ce - ecc)
    yp = b * se
    rfac = 1.0 - ecc * ce
    vxp = -a * n * se / rfac
    vyp = b * n * ce / rfac

    cw = math.cos(argp)
    sw = math.sin(argp)
    co = math.cos(raan)
    so = math.sin(raan)
    ci = math.cos(inc)
    si = math.sin(inc)

    # R = Rz(raan) Rx(inc) Rz(argp), first two columns
    r11 = co * cw - so * sw * ci
    r12 = -co * sw - so * cw * ci
    r21 = so * cw + co * sw * ci
    r22 = -so * sw + co * cw * ci
    r31 = sw * si
    r32 = cw * si

    rx = r11 * xp + r12 * yp
    ry = r21 * xp + r22 * yp
    rz = r31 * xp + r32 * yp
    vx = r11 * vxp + r12 * vyp
    vy = r21 * vxp + r22 * vyp
    vz = r31 * vxp + r32 * vyp
    return rx, ry, rz, vx, vy, vz


@njit(cache=True)
def ephemeris(body, mjd2000, eph_coef, target_elems, mu_sun):
    """Heliocentric ecliptic state of a planet (1..9) or mission target.

    Planets use the analytic mean-element series from the constants table;
    targets (ids 10..) use fixed elements propagated from their epoch.
    Returns (rx, ry, rz, vx, vy, vz, status).
    """
    two_pi = 2.0 * math.pi
    if 1 <= body <= 9:
        if body == 9:
            t_cent = mjd2000 / 36525.0
        else:
            t_cent = (mjd2000 + 36525.0) / 36525.0
        el = np.empty(6)
        for k in range(6):
            c = eph_coef[body, k]
            el[k] = c[0] + t_cent * (
                c[1] + t_cent * (c[2] + t_cent * (c[3] + t_cent * (c[4] + t_cent * c[5])))
            )
        m = el[5] % two_pi
        e_anom, status = kepler_elliptic(m, el[1])
        if status != OK:
            return 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, status
        rx, ry, rz, vx, vy, vz = elements_to_state(
            el[0], el[1], el[2], el[3], el[4], e_anom, mu_sun
        )
        return rx, ry, rz, vx, vy, vz, OK

    idx = body - 10
    if idx < 0 or idx >= target_elems.shape[0]:
        return 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, ERR_BODY
    a = target_elems[idx, 0]
    ecc = target_elems[idx, 1]
    n = math.sqrt(mu_sun / (a * a * a))
    dt = (mjd2000 - target_elems[idx, 6]) * DAY
    m = (target_elems[idx, 5] + n * dt) % two_pi
    e_anom, status = kepler_elliptic(m, ecc)
    if status != OK:
        return 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, status
    rx, ry, rz, vx, vy, vz = elements_to_state(
        a, ecc, target_elems[idx, 2], target_elems[idx, 3], target_elems[idx, 4],
        e_anom, mu_sun,
    )
    return rx, ry, rz, vx, vy, vz, OK


# ---------------------------------------------------------------------------
# universal-variable conic propagation
# ---------------------------------------------------------------------------

@njit(cache=True)
def _stumpff(psi):
    if psi > 1e-6:
        sq = math.sqrt(psi)
        c2 = (1.0 - math.cos(sq)) / psi
        c3 = (sq - math.sin(sq)) / (sq * psi)
    elif psi < -1e-6:
        sq = math.sqrt(-psi)
        c2 = (1.0 - math.cosh(sq)) / psi
        c3 = (math.sinh(sq) - sq) / (sq * -psi)
    else:
        c2 = 1.0 / 2.0 - psi / 24.0 + psi * psi / 720.0 - psi * psi * psi / 40320.0
        c3 = 1.0 / 6.0 - psi / 120.0 + psi * psi / 5040.0 - psi * psi * psi / 362880.0
    return c2, c3


@njit(cache=True)
def propagate_state(rx, ry, rz, vx, vy, vz, dt, mu):
    """Advance a state along its osculating conic by dt seconds.

    Universal-variable Kepler propagation (Lagrange f and g), exact for any
    elliptic or hyperbolic two-body orbit.  Returns the new state and a
    status; rectilinear states are rejected as degenerate.
    """
    r0 = _norm(rx, ry, rz)
    if r0 <= 0.0:
        return rx, ry, rz, vx, vy, vz, ERR_DEGENERATE
    if dt == 0.0:
        return rx, ry, rz, vx, vy, vz, OK

    v02 = vx * vx + vy * vy + vz * vz
    hx, hy, hz = _cross(rx, ry, rz, vx, vy, vz)
    h2 = hx * hx + hy * hy + hz * hz
    if h2 <= r0 * r0 * v02 * 1e-24:
        return rx, ry, rz, vx, vy, vz, ERR_DEGENERATE

    sqmu = math.sqrt(mu)
    alpha = 2.0 / r0 - v02 / mu  # 1/a
    rdotv = rx * vx + ry * vy + rz * vz

    if alpha > 1e-12:
        chi = sqmu * dt * alpha
    elif alpha < -1e-12:
        a_inv = alpha
        num = -2.0 * mu * a_inv * dt
        den = rdotv + math.copysign(1.0, dt) * math.sqrt(-mu / a_inv) * (1.0 - r0 * a_inv)
        if num / den > 0.0:
            chi = math.copysign(1.0, dt) * math.sqrt(-1.0 / a_inv) * math.log(num / den)
        else:
            chi = sqmu * dt / r0
    else:
        chi = sqmu * dt / r0

    # Newton iteration on the universal Kepler equation, with a bracketing
    # bisection fallback (t is monotone increasing in chi).
    converged = False
    psi = 0.0
    c2 = 0.0
    c3 = 0.0
    rmag = r0
    tol = 1e-13 * abs(dt) + 1e-10
    for _ in range(60):
        psi = chi * chi * alpha
        c2, c3 = _stumpff(psi)
        chi2 = chi * chi
        t = (chi2 * chi * c3 + rdotv / sqmu * chi2 * c2 + r0 * chi * (1.0 - psi * c3)) / sqmu
        rmag = chi2 * c2 + rdotv / sqmu * chi * (1.0 - psi * c3) + r0 * (1.0 - psi * c2)
        err = dt - t
        if abs(err) <= tol:
            converged = True
            break
        chi += err * sqmu / rmag

    if not converged:
        # expanding bracket + bisection
        step = max(abs(chi), sqmu * abs(dt) / r0, 1.0)
        lo = -step
        hi = step
        for _ in range(200):
            psi = hi * hi * alpha
            c2, c3 = _stumpff(psi)
            t_hi = (hi * hi * hi * c3 + rdotv / sqmu * hi * hi * c2
                    + r0 * hi * (1.0 - psi * c3)) / sqmu
            if t_hi >= dt:
                break
            hi *= 2.0
        for _ in range(200):
            psi = lo * lo * alpha
            c2, c3 = _stumpff(psi)
            t_lo = (lo * lo * lo * c3 + rdotv / sqmu * lo * lo * c2
                    + r0 * lo * (1.0 - psi * c3)) / sqmu
            if t_lo <= dt:
                break
            lo *= 2.0
        for _ in range(300):
            chi = 0.5 * (lo + hi)
            psi = chi * chi * alpha
            c2, c3 = _stumpff(psi)
            chi2 = chi * chi
            t = (chi2 * chi * c3 + rdotv / sqmu * chi2 * c2
                 + r0 * chi * (1.0 - psi * c3)) / sqmu
            rmag = chi2 * c2 + rdotv / sqmu * chi * (1.0 - psi * c3) + r0 * (1.0 - psi * c2)
            err = dt - t
            if abs(err) <= tol:
                converged = True
                break
            if t > dt:
                hi = chi
            else:
                lo = chi
        if not converged:
            return rx, ry, rz, vx, vy, vz, ERR_PROPAGATE

    chi2 = chi * chi
    f = 1.0 - chi2 * c2 / r0
    g = dt - chi2 * chi * c3 / sqmu
    fdot = sqmu / (rmag * r0) * chi * (psi * c3 - 1.0)
    gdot = 1.0 - chi2 * c2 / rmag

    nrx = f * rx + g * vx
    nry = f * ry + g * vy
    nrz = f * rz + g * vz
    nvx = fdot * rx + gdot * vx
    nvy = fdot * ry + gdot * vy
    nvz = fdot * rz + gdot * vz
    return nrx, nry, nrz, nvx, nvy, nvz, OK


# ---------------------------------------------------------------------------
# Lambert boundary-value problem (single revolution)
# ---------------------------------------------------------------------------

@njit(cache=True)
def _lambert_tof(x, lam):
    """Non-dimensional time of flight T(x) for the single-revolution arc."""
    battin = 0.01
    lagrange = 0.2
    dist = abs(x - 1.0)
    if battin < dist < lagrange:
        a = 1.0 / (1.0 - x * x)
        if a > 0.0:
            alfa = 2.0 * math.acos(x)
            beta = 2.0 * math.asin(math.sqrt(lam * lam / a))
            if lam < 0.0:
                beta = -beta
            return (a * math.sqrt(a)
                    * ((alfa - math.sin(alfa)) - (beta - math.sin(beta)))) / 2.0
        alfa = 2.0 * math.acosh(x)
        beta = 2.0 * math.asinh(math.sqrt(-lam * lam / a))
        if lam < 0.0:
            beta = -beta
        return (-a * math.sqrt(-a)
                * ((beta - math.sinh(beta)) - (alfa - math.sinh(alfa)))) / 2.0

    k = lam * lam
    big_e = x * x - 1.0
    rho = abs(big_e)
    z = math.sqrt(1.0 + k * big_e)
    if dist < battin:
        # Battin series about the parabola
        eta = z - lam * x
        s1 = 0.5 * (1.0 - lam - x * eta)
        # hypergeometric 2F1(3, 1; 5/2; s1)
        sj = 1.0
        cj = 1.0
        for j in range(125):
            cj = cj * (3.0 + j) * (1.0 + j) / (2.5 + j) * s1 / (j + 1.0)
            sj += cj
            if abs(cj) < 1e-11:
                break
        q = 4.0 / 3.0 * sj
        return (eta * eta * eta * q + 4.0 * lam * eta) / 2.0
    # Lancaster-Blanchard
    y = math.sqrt(rho)
    g = x * z - lam * big_e
    if big_e < 0.0:
        d = math.acos(g)
    else:
        d = math.log(max(y * (z - lam * x) + g, 1e-300))
    return (x - lam * z - d / y) / big_e


@njit(cache=True)
def _lambert_dtdx(x, t, lam):
    l2 = lam * lam
    l3 = l2 * lam
    umx2 = 1.0 - x * x
    y = math.sqrt(1.0 - l2 * umx2)
    y2 = y * y
    y3 = y2 * y
    dt = 1.0 / umx2 * (3.0 * t * x - 2.0 + 2.0 * l3 * x / y)
    ddt = 1.0 / umx2 * (3.0 * t + 5.0 * x * dt + 2.0 * (1.0 - l2) * l3 / y3)
    dddt = 1.0 / umx2 * (7.0 * x * ddt + 8.0 * dt - 6.0 * x * l2 * l3 / (y3 * y2) * (1.0 - l2))
    return dt, ddt, dddt


@njit(cache=True)
def lambert(r1x, r1y, r1z, r2x, r2y, r2z, tof, mu, retrograde):
    """Single-revolution Lambert arc between two heliocentric positions.

    The transfer sense is prograde (z-component of the heliocentric angular
    momentum >= 0) unless ``retrograde`` is set.  Returns
    (v1x, v1y, v1z, v2x, v2y, v2z, status).
    """
    if tof <= 0.0:
        return 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, ERR_TOF

    r1n = _norm(r1x, r1y, r1z)
    r2n = _norm(r2x, r2y, r2z)
    if r1n <= 0.0 or r2n <= 0.0:
        return 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, ERR_COLLINEAR

    cx = r2x - r1x
    cy = r2y - r1y
    cz = r2z - r1z
    c = _norm(cx, cy, cz)
    s = 0.5 * (r1n + r2n + c)

    ir1x, ir1y, ir1z = r1x / r1n, r1y / r1n, r1z / r1n
    ir2x, ir2y, ir2z = r2x / r2n, r2y / r2n, r2z / r2n
    ihx, ihy, ihz = _cross(ir1x, ir1y, ir1z, ir2x, ir2y, ir2z)
    ihn = _norm(ihx, ihy, ihz)

    if ihn < 1e-14:
        # transfer angle 0 or pi.  Same-direction endpoints have no plane;
        # for opposite endpoints any plane through them works, so take the
        # +z direction projected normal to r1 (planar geometries keep their
        # plane and stay prograde).
        if _dot(ir1x, ir1y, ir1z, ir2x, ir2y, ir2z) > 0.0:
            return 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, ERR_COLLINEAR
        ihx = -ir1z * ir1x
        ihy = -ir1z * ir1y
        ihz = 1.0 - ir1z * ir1z
        ihn = _norm(ihx, ihy, ihz)
        if ihn < 1e-14:
            ihx, ihy, ihz, ihn = 1.0, 0.0, 0.0, 1.0
    ihx, ihy, ihz = ihx / ihn, ihy / ihn, ihz / ihn

    lam2 = 1.0 - c / s
    lam = math.sqrt(max(lam2, 0.0))

    if ihz < 0.0:
        # transfer angle larger than pi for prograde motion
        lam = -lam
        it1x, it1y, it1z = _cross(ir1x, ir1y, ir1z, ihx, ihy, ihz)
        it2x, it2y, it2z = _cross(ir2x, ir2y, ir2z, ihx, ihy, ihz)
    else:
        it1x, it1y, it1z = _cross(ihx, ihy, ihz, ir1x, ir1y, ir1z)
        it2x, it2y, it2z = _cross(ihx, ihy, ihz, ir2x, ir2y, ir2z)

    if retrograde:
        lam = -lam
        it1x, it1y, it1z = -it1x, -it1y, -it1z
        it2x, it2y, it2z = -it2x, -it2y, -it2z

    t_nd = math.sqrt(2.0 * mu / (s * s * s)) * tof

    # initial guess (Izzo 2015)
    t00 = math.acos(lam) + lam * math.sqrt(max(1.0 - lam * lam, 0.0))
    t1 = 2.0 / 3.0 * (1.0 - lam * lam * lam)
    if t_nd >= t00:
        x = -(t_nd - t00) / (t_nd - t00 + 4.0)
    elif t_nd <= t1:
        x = t1 * (t1 - t_nd) / (2.0 / 5.0 * (1.0 - lam ** 5) * t_nd) + 1.0
    else:
        x = (t_nd / t00) ** (0.6931471805599453 / math.log(t1 / t00)) - 1.0

    # Householder third-order iterations
    converged = False
    for _ in range(30):
        t_cur = _lambert_tof(x, lam)
        dt, ddt, dddt = _lambert_dtdx(x, t_cur, lam)
        delta = t_cur - t_nd
        dt2 = dt * dt
        xnew = x - delta * (dt2 - delta * ddt / 2.0) / (
            dt * (dt2 - delta * ddt) + dddt * delta * delta / 6.0
        )
        err = abs(x - xnew)
        x = xnew
        if err < 1e-13:
            converged = True
            break
    if not converged or not math.isfinite(x):
        return 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, ERR_LAMBERT

    gamma = math.sqrt(mu * s / 2.0)
    rho = (r1n - r2n) / c
    sigma = math.sqrt(max(1.0 - rho * rho, 0.0))
    y = math.sqrt(max(1.0 - lam2 * (1.0 - x * x), 0.0))

    vr1 = gamma * ((lam * y - x) - rho * (lam * y + x)) / r1n
    vr2 = -gamma * ((lam * y - x) + rho * (lam * y + x)) / r2n
    vt = gamma * sigma * (y + lam * x)
    vt1 = vt / r1n
    vt2 = vt / r2n

    v1x = vr1 * ir1x + vt1 * it1x
    v1y = vr1 * ir1y + vt1 * it1y
    v1z = vr1 * ir1z + vt1 * it1z
    v2x = vr2 * ir2x + vt2 * it2x
    v2y = vr2 * ir2y + vt2 * it2y
    v2z = vr2 * ir2z + vt2 * it2z
    return v1x, v1y, v1z, v2x, v2y, v2z, OK


# ---------------------------------------------------------------------------
# swing-by mechanics
# ---------------------------------------------------------------------------

@njit(cache=True)
def unpowered_swingby(vrx, vry, vrz, vpx, vpy, vpz, rp, beta, mu):
    """Rotate an incoming v-infinity vector through an unpowered fly-by.

    ``(vrx, vry, vrz)`` is the planetocentric hyperbolic excess velocity,
    ``(vpx, vpy, vpz)`` the planet's heliocentric velocity (it fixes the
    b-plane reference frame: i along v-infinity, j along i x v_planet,
    k completing the triad).  Returns the outgoing excess velocity.
    """
    vrel = _norm(vrx, vry, vrz)
    ecc = 1.0 + rp * vrel * vrel / mu
    delta = 2.0 * math.asin(1.0 / ecc)

    ix, iy, iz = vrx / vrel, vry / vrel, vrz / vrel
    jx, jy, jz = _cross(ix, iy, iz, vpx, vpy, vpz)
    jn = _norm(jx, jy, jz)
    jx, jy, jz = jx / jn, jy / jn, jz / jn
    kx, ky, kz = _cross(ix, iy, iz, jx, jy, jz)

    cd = math.cos(delta)
    sd = math.sin(delta)
    cb = math.cos(beta)
    sb = math.sin(beta)
    ox = vrel * (cd * ix + sd * cb * jx + sd * sb * kx)
    oy = vrel * (cd * iy + sd * cb * jy + sd * sb * ky)
    oz = vrel * (cd * iz + sd * cb * jz + sd * sb * kz)
    return ox, oy, oz


@njit(cache=True)
def powered_swingby(vin, vout, alpha, mu, rp_min):
    """Pericenter radius and impulsive cost of a powered fly-by.

    Finds rp solving
        asin(mu/(mu + rp vin^2)) + asin(mu/(mu + rp vout^2)) = alpha
    (safeguarded Newton, relative tolerance 1e-12) and the velocity change
    applied at pericenter,
        dv = |sqrt(vout^2 + 2 mu/rp) - sqrt(vin^2 + 2 mu/rp)|.

    alpha <= 0 has no finite root (the turning vanishes as rp -> inf); rp is
    then clamped to rp_min, which keeps the pericenter constraint defined.
    Returns (dv, rp).
    """
    a_in = mu / (vin * vin)
    a_out = mu / (vout * vout)

    if alpha <= 0.0:
        rp = rp_min
        dv = abs(math.sqrt(vout * vout + 2.0 * mu / rp)
                 - math.sqrt(vin * vin + 2.0 * mu / rp))
        return dv, rp
    if alpha >= math.pi:
        # turning saturates as rp -> 0; the cost vanishes in that limit
        return 0.0, 0.0

    # bracket the (unique) root of the monotone-decreasing turning equation
    lo = 0.0
    hi = max(a_in, a_out)
    for _ in range(200):
        f_hi = (math.asin(a_in / (a_in + hi)) + math.asin(a_out / (a_out + hi)) - alpha)
        if f_hi < 0.0:
            break
        hi *= 4.0

    # Newton from an equal-speeds closed-form starter
    s_half = math.sin(alpha / 2.0)
    rp = 0.5 * (a_in + a_out) * (1.0 - s_half) / s_half
    if not (lo < rp < hi):
        rp = 0.5 * hi
    for _ in range(100):
        f = math.asin(a_in / (a_in + rp)) + math.asin(a_out / (a_out + rp)) - alpha
        if f > 0.0:
            lo = rp
        else:
            hi = rp
        df = (-a_in / ((a_in + rp) * math.sqrt(rp * (rp + 2.0 * a_in)))
              - a_out / ((a_out + rp) * math.sqrt(rp * (rp + 2.0 * a_out))))
        step = f / df
        rp_new = rp - step
        if rp_new <= lo or rp_new >= hi:
            rp_new = 0.5 * (lo + hi)
        if abs(rp_new - rp) <= 1e-12 * rp_new:
            rp = rp_new
            break
        rp = rp_new

    dv = abs(math.sqrt(vout * vout + 2.0 * mu / rp)
             - math.sqrt(vin * vin + 2.0 * mu / rp))
    return dv, rp


# ---------------------------------------------------------------------------
# multi-gravity-assist model (powered swing-bys, no deep-space maneuvers)
# ---------------------------------------------------------------------------

@njit(cache=True)
def mga_eval(t0, tofs, seq, arrival_mode, arr_rp, arr_ecc, flip_last_leg,
             eph_coef, target_elems, mu_sun, body_mu, body_rpmin,
             dv_events, rp_fly):
    """Chain Lambert legs through powered swing-bys.

    ``dv_events`` receives [launch, fly-by 1.., arrival]; ``rp_fly`` the
    achieved fly-by pericenter radii.  For the impact arrival mode the
    returned auxiliary value is the dot product of the arrival relative
    velocity with the target's heliocentric velocity; for orbit insertion
    it is the arrival v-infinity magnitude.
    Returns (aux, status); status encodes the failing leg as code + 100*leg.
    """
    nb = seq.shape[0]
    r = np.empty((nb, 3))
    v = np.empty((nb, 3))
    t = t0
    for i in range(nb):
        if i > 0:
            t += tofs[i - 1]
        rx, ry, rz, vx, vy, vz, status = ephemeris(seq[i], t, eph_coef, target_elems, mu_sun)
        if status != OK:
            return 0.0, status + 100 * i
        r[i, 0], r[i, 1], r[i, 2] = rx, ry, rz
        v[i, 0], v[i, 1], v[i, 2] = vx, vy, vz

    prev_vx = 0.0
    prev_vy = 0.0
    prev_vz = 0.0
    for leg in range(nb - 1):
        retro = flip_last_leg and leg == nb - 2
        v1x, v1y, v1z, v2x, v2y, v2z, status = lambert(
            r[leg, 0], r[leg, 1], r[leg, 2],
            r[leg + 1, 0], r[leg + 1, 1], r[leg + 1, 2],
            tofs[leg] * DAY, mu_sun, retro,
        )
        if status != OK:
            return 0.0, status + 100 * leg

        if leg == 0:
            dv_events[0] = _norm(v1x - v[0, 0], v1y - v[0, 1], v1z - v[0, 2])
        else:
            vinx = prev_vx - v[leg, 0]
            viny = prev_vy - v[leg, 1]
            vinz = prev_vz - v[leg, 2]
            voutx = v1x - v[leg, 0]
            vouty = v1y - v[leg, 1]
            voutz = v1z - v[leg, 2]
            vin_n = _norm(vinx, viny, vinz)
            vout_n = _norm(voutx, vouty, voutz)
            ca = _dot(vinx, viny, vinz, voutx, vouty, voutz) / (vin_n * vout_n)
            if ca > 1.0:
                ca = 1.0
            elif ca < -1.0:
                ca = -1.0
            alpha = math.acos(ca)
            body = seq[leg]
            dv, rp = powered_swingby(vin_n, vout_n, alpha, body_mu[body], body_rpmin[body])
            dv_events[leg] = dv
            rp_fly[leg - 1] = rp

        prev_vx, prev_vy, prev_vz = v2x, v2y, v2z

    last = nb - 1
    vrx = prev_vx - v[last, 0]
    vry = prev_vy - v[last, 1]
    vrz = prev_vz - v[last, 2]
    if arrival_mode == ARR_INSERTION:
        vinf = _norm(vrx, vry, vrz)
        mu_t = body_mu[seq[last]]
        dv_events[last] = abs(
            math.sqrt(vinf * vinf + 2.0 * mu_t / arr_rp)
            - math.sqrt(mu_t * (1.0 + arr_ecc) / arr_rp)
        )
        return vinf, OK
    # impact: no maneuver, report the projection driving the objective
    dv_events[last] = 0.0
    aux = _dot(vrx, vry, vrz, v[last, 0], v[last, 1], v[last, 2])
    return aux, OK


# ---------------------------------------------------------------------------
# multi-gravity-assist model with one deep-space maneuver per leg
# ---------------------------------------------------------------------------

@njit(cache=True)
def time_to_radius(rx, ry, rz, vx, vy, vz, r_target, mu):
    """Coasting time (s) until the osculating orbit first reaches r_target.

    Returns a negative value when the orbit never reaches the target radius
    (elliptic with apoapsis below it).
    """
    r0 = _norm(rx, ry, rz)
    if r0 >= r_target:
        return 0.0

    v2 = vx * vx + vy * vy + vz * vz
    energy = 0.5 * v2 - mu / r0
    hx, hy, hz = _cross(rx, ry, rz, vx, vy, vz)
    h2 = hx * hx + hy * hy + hz * hz
    p = h2 / mu
    rdotv = rx * vx + ry * vy + rz * vz

    if abs(energy) < 1e-14:
        energy = -1e-14
    a = -mu / (2.0 * energy)
    ecc2 = 1.0 - p / a
    ecc = math.sqrt(max(ecc2, 0.0))
    if ecc < 1e-12:
        return -1.0

    if energy < 0.0 and a * (1.0 + ecc) < r_target:
        return -1.0

    cnu0 = (p / r0 - 1.0) / ecc
    if cnu0 > 1.0:
        cnu0 = 1.0
    elif cnu0 < -1.0:
        cnu0 = -1.0
    nu0 = math.acos(cnu0)
    if rdotv < 0.0:
        nu0 = -nu0
    cnut = (p / r_target - 1.0) / ecc
    if cnut > 1.0:
        cnut = 1.0
    elif cnut < -1.0:
        cnut = -1.0
    nut = math.acos(cnut)  # outbound crossing

    if energy < 0.0:
        n = math.sqrt(mu / (a * a * a))
        e0 = 2.0 * math.atan2(math.sqrt(1.0 - ecc) * math.sin(nu0 / 2.0),
                              math.sqrt(1.0 + ecc) * math.cos(nu0 / 2.0))
        m0 = e0 - ecc * math.sin(e0)
        et = 2.0 * math.atan2(math.sqrt(1.0 - ecc) * math.sin(nut / 2.0),
                              math.sqrt(1.0 + ecc) * math.cos(nut / 2.0))
        mt = et - ecc * math.sin(et)
        dm = mt - m0
        if dm < 0.0:
            dm += 2.0 * math.pi
        return dm / n

    a_h = -a  # positive
    n = math.sqrt(mu / (a_h * a_h * a_h))
    th0 = math.sqrt((ecc - 1.0) / (ecc + 1.0)) * math.tan(nu0 / 2.0)
    tht = math.sqrt((ecc - 1.0) / (ecc + 1.0)) * math.tan(nut / 2.0)
    if abs(th0) >= 1.0 or abs(tht) >= 1.0:
        return -1.0
    h0 = 2.0 * math.atanh(th0)
    m0 = ecc * math.sinh(h0) - h0
    ht = 2.0 * math.atanh(tht)
    mt = ecc * math.sinh(ht) - ht
    return (mt - m0) / n


@njit(cache=True)
def mga_dsm_eval(t0, vinf0, u, v_par, tofs, etas, rp_ratio, bplane, seq,
                 arrival_mode, r_target,
                 eph_coef, target_elems, mu_sun, body_mu, body_radius,
                 dv_dsm):
    """Chain propagate + Lambert legs through unpowered swing-bys.

    One deep-space maneuver per leg at fraction eta of the leg duration.
    For the rendezvous mode the returned auxiliary value is the arrival
    maneuver magnitude; for the distance mode it is the coasting time (s)
    after the final swing-by until ``r_target`` is reached (negative when
    unreachable).  Returns (aux, status).
    """
    nb = seq.shape[0]
    nlegs = nb - 1
    r = np.empty((nb, 3))
    v = np.empty((nb, 3))
    t = t0
    for i in range(nb):
        if i > 0:
            t += tofs[i - 1]
        rx, ry, rz, vx, vy, vz, status = ephemeris(seq[i], t, eph_coef, target_elems, mu_sun)
        if status != OK:
            return 0.0, status + 100 * i
        r[i, 0], r[i, 1], r[i, 2] = rx, ry, rz
        v[i, 0], v[i, 1], v[i, 2] = vx, vy, vz

    # Launch asymptote from the polar-angle parameters, expressed in the
    # start planet's velocity frame: i along the planet velocity, k along
    # the orbit normal, j completing the right-handed triad.
    theta = 2.0 * math.pi * u
    phi = math.acos(2.0 * v_par - 1.0) - math.pi / 2.0
    vpn = _norm(v[0, 0], v[0, 1], v[0, 2])
    ix, iy, iz = v[0, 0] / vpn, v[0, 1] / vpn, v[0, 2] / vpn
    kx, ky, kz = _cross(r[0, 0], r[0, 1], r[0, 2], v[0, 0], v[0, 1], v[0, 2])
    kn = _norm(kx, ky, kz)
    kx, ky, kz = kx / kn, ky / kn, kz / kn
    jx, jy, jz = _cross(kx, ky, kz, ix, iy, iz)
    ci = vinf0 * math.cos(theta) * math.cos(phi)
    cj = vinf0 * math.sin(theta) * math.cos(phi)
    ck = vinf0 * math.sin(phi)
    cur_vx = v[0, 0] + ci * ix + cj * jx + ck * kx
    cur_vy = v[0, 1] + ci * iy + cj * jy + ck * ky
    cur_vz = v[0, 2] + ci * iz + cj * jz + ck * kz
    cur_rx, cur_ry, cur_rz = r[0, 0], r[0, 1], r[0, 2]

    aux = 0.0
    for leg in range(nlegs):
        t_leg = tofs[leg] * DAY
        eta = etas[leg]
        dx, dy, dz, dvx_, dvy_, dvz_, status = propagate_state(
            cur_rx, cur_ry, cur_rz, cur_vx, cur_vy, cur_vz, eta * t_leg, mu_sun
        )
        if status != OK:
            return 0.0, status + 100 * leg
        nxt = leg + 1
        v1x, v1y, v1z, v2x, v2y, v2z, status = lambert(
            dx, dy, dz, r[nxt, 0], r[nxt, 1], r[nxt, 2],
            (1.0 - eta) * t_leg, mu_sun, False,
        )
        if status != OK:
            return 0.0, status + 100 * leg
        dv_dsm[leg] = _norm(v1x - dvx_, v1y - dvy_, v1z - dvz_)

        if nxt < nb - 1:
            # unpowered swing-by at an intermediate body
            body = seq[nxt]
            vrx = v2x - v[nxt, 0]
            vry = v2y - v[nxt, 1]
            vrz = v2z - v[nxt, 2]
            ox, oy, oz = unpowered_swingby(
                vrx, vry, vrz, v[nxt, 0], v[nxt, 1], v[nxt, 2],
                rp_ratio[leg] * body_radius[body], bplane[leg], body_mu[body],
            )
            cur_vx = v[nxt, 0] + ox
            cur_vy = v[nxt, 1] + oy
            cur_vz = v[nxt, 2] + oz
            cur_rx, cur_ry, cur_rz = r[nxt, 0], r[nxt, 1], r[nxt, 2]
        else:
            if arrival_mode == DSM_RENDEZVOUS:
                aux = _norm(v2x - v[nxt, 0], v2y - v[nxt, 1], v2z - v[nxt, 2])
            else:
                # swing by the final body too, then coast outward
                body = seq[nxt]
                vrx = v2x - v[nxt, 0]
                vry = v2y - v[nxt, 1]
                vrz = v2z - v[nxt, 2]
                ox, oy, oz = unpowered_swingby(
                    vrx, vry, vrz, v[nxt, 0], v[nxt, 1], v[nxt, 2],
                    rp_ratio[leg] * body_radius[body], bplane[leg], body_mu[body],
                )
                aux = time_to_radius(
                    r[nxt, 0], r[nxt, 1], r[nxt, 2],
                    v[nxt, 0] + ox, v[nxt, 1] + oy, v[nxt, 2] + oz,
                    r_target, mu_sun,
                )
    return aux, OK
