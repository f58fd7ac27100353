"""Benchmark-instance evaluation kernels.

One compiled entry point, :func:`eval_instance`, maps an instance id and a
raw decision vector onto objective and constraint buffers.  The mixed-integer
and multi-objective variants share the continuous evaluation code paths
bit-for-bit with their parent instance, which the embedding invariants of the
test suite rely on.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit, prange

from ._kernels import (
    ARR_IMPACT,
    ARR_INSERTION,
    DSM_DISTANCE,
    DSM_RENDEZVOUS,
    OK,
    ERR_SEQUENCE,
    DAY,
    mga_dsm_eval,
    mga_eval,
)

G0 = 9.80665e-3          # standard gravity, km/s^2
IMPACT_ISP = 2500.0      # impact mission thruster specific impulse, s
IMPACT_MASS = 1500.0     # impact mission launch mass, kg
IMPACT_VINF_FREE = 2.5   # launcher-provided hyperbolic excess, km/s
CAPTURE_RP = 108950.0    # Saturn capture orbit pericenter, km
CAPTURE_ECC = 0.98       # Saturn capture orbit eccentricity
DV_BUDGET_TOTAL = 6.782    # launcher + on-board budget, km/s
DV_BUDGET_ONBOARD = 1.782  # on-board (maneuver) budget, km/s
UNREACHED_PENALTY = 100000.0  # objective when 50 AU is never reached


@njit(cache=True)
def _round_half_away(x):
    if x >= 0.0:
        return math.floor(x + 0.5)
    return math.ceil(x - 0.5)


@njit(cache=True)
def _saturn_mission(x, seq, eph_coef, target_elems, mu_sun, body_mu, body_rpmin,
                    dv_events, rp_fly):
    """Shared powered swing-by evaluation for the Saturn-insertion family."""
    tofs = x[1:6]
    aux, status = mga_eval(
        x[0], tofs, seq, ARR_INSERTION, CAPTURE_RP, CAPTURE_ECC, False,
        eph_coef, target_elems, mu_sun, body_mu, body_rpmin,
        dv_events, rp_fly,
    )
    if status != OK:
        return 0.0, status
    total = dv_events[0]
    for i in range(1, 6):
        total += dv_events[i]
    return total, OK


@njit(cache=True)
def eval_instance(pid, x, eph_coef, target_elems, mu_sun, au_km,
                  body_mu, body_radius, body_rpmin, f, g):
    """Evaluate one decision vector.  Returns a status code (0 = success)."""
    dv_events = np.zeros(9)
    rp_fly = np.zeros(7)
    dv_dsm = np.zeros(6)

    if pid == 1 or pid == 8 or pid == 9 or pid == 10:
        seq = np.empty(6, dtype=np.int64)
        seq[0] = 3
        seq[5] = 6
        if pid == 1 or pid == 9:
            seq[1] = 2
            seq[2] = 2
            seq[3] = 3
            seq[4] = 5
        else:
            for k in range(4):
                y = _round_half_away(x[6 + k])
                if y < 1.0 or y > 9.0:
                    return ERR_SEQUENCE
                seq[1 + k] = np.int64(y)
        total, status = _saturn_mission(
            x, seq, eph_coef, target_elems, mu_sun, body_mu, body_rpmin,
            dv_events, rp_fly,
        )
        if status != OK:
            return status
        f[0] = total
        for k in range(4):
            rpm = body_rpmin[seq[1 + k]]
            g[k] = (rp_fly[k] - rpm) / rpm
        if pid == 9 or pid == 10:
            f[1] = x[1] + x[2] + x[3] + x[4] + x[5]
            bound = 7.0 if pid == 9 else 6.0
            g[4] = bound - f[0]
        return OK

    if pid == 5:
        seq = np.empty(8, dtype=np.int64)
        seq[0] = 3
        seq[1] = 2
        seq[2] = 3
        seq[3] = 2
        seq[4] = 3
        seq[5] = 5
        seq[6] = 6
        seq[7] = 10
        tofs = x[1:8]
        aux, status = mga_eval(
            x[0], tofs, seq, ARR_IMPACT, 0.0, 0.0, True,
            eph_coef, target_elems, mu_sun, body_mu, body_rpmin,
            dv_events, rp_fly,
        )
        if status != OK:
            return status
        dv_used = 0.0
        for i in range(1, 7):
            dv_used += dv_events[i]
        if dv_events[0] > IMPACT_VINF_FREE:
            dv_used += dv_events[0] - IMPACT_VINF_FREE
        mass_final = IMPACT_MASS * math.exp(-dv_used / (IMPACT_ISP * G0))
        f[0] = -mass_final * abs(aux)
        for k in range(6):
            rpm = body_rpmin[seq[1 + k]]
            g[k] = (rp_fly[k] - rpm) / rpm
        return OK

    # deep-space-maneuver family.  The launch hyperbolic excess counts toward
    # the objective only where the reference accounting includes it (the
    # Saturn mission and the reduced Mercury mission budget their launcher;
    # the resonant Mercury tour and the comet rendezvous treat launch as
    # provided).
    count_launch = False
    if pid == 2:
        seq = np.array([3, 2, 2, 3, 5, 6], dtype=np.int64)
        mode = DSM_RENDEZVOUS
        count_launch = True
    elif pid == 3:
        seq = np.array([3, 3, 2, 2, 1], dtype=np.int64)
        mode = DSM_RENDEZVOUS
        count_launch = True
    elif pid == 4:
        seq = np.array([3, 2, 2, 1, 1, 1, 1], dtype=np.int64)
        mode = DSM_RENDEZVOUS
    elif pid == 6:
        seq = np.array([3, 3, 4, 3, 3, 11], dtype=np.int64)
        mode = DSM_RENDEZVOUS
    elif pid == 7:
        seq = np.array([3, 3, 5], dtype=np.int64)
        mode = DSM_DISTANCE
    else:
        return ERR_SEQUENCE

    nlegs = seq.shape[0] - 1
    nfly = nlegs - 1 if mode == DSM_RENDEZVOUS else nlegs
    tofs = x[4:4 + nlegs]
    etas = x[4 + nlegs:4 + 2 * nlegs]
    rp_ratio = x[4 + 2 * nlegs:4 + 2 * nlegs + nfly]
    bplane = x[4 + 2 * nlegs + nfly:4 + 2 * nlegs + 2 * nfly]

    aux, status = mga_dsm_eval(
        x[0], x[1], x[2], x[3], tofs, etas, rp_ratio, bplane, seq,
        mode, 50.0 * au_km,
        eph_coef, target_elems, mu_sun, body_mu, body_radius,
        dv_dsm,
    )
    if status != OK:
        return status

    if mode == DSM_RENDEZVOUS:
        total = 0.0
        for i in range(nlegs):
            total += dv_dsm[i]
        f[0] = total + aux
        if count_launch:
            f[0] += x[1]
        return OK

    # distance mode: objective is years until 50 AU; budgets become constraints
    dv_onboard = 0.0
    for i in range(nlegs):
        dv_onboard += dv_dsm[i]
    total_days = 0.0
    for i in range(nlegs):
        total_days += tofs[i]
    if aux >= 0.0:
        f[0] = (total_days + aux / DAY) / 365.25
    else:
        f[0] = UNREACHED_PENALTY
    g[0] = (DV_BUDGET_TOTAL - (x[1] + dv_onboard)) / DV_BUDGET_TOTAL
    g[1] = (DV_BUDGET_ONBOARD - dv_onboard) / DV_BUDGET_ONBOARD
    return OK


@njit(cache=True, parallel=True)
def eval_batch(pid, xs, eph_coef, target_elems, mu_sun, au_km,
               body_mu, body_radius, body_rpmin, fs, gs, status):
    """Evaluate many vectors; rows are independent, order is preserved."""
    for i in prange(xs.shape[0]):
        status[i] = eval_instance(
            pid, xs[i], eph_coef, target_elems, mu_sun, au_km,
            body_mu, body_radius, body_rpmin, fs[i], gs[i],
        )


@njit(cache=True)
def eval_serial(pid, xs, eph_coef, target_elems, mu_sun, au_km,
                body_mu, body_radius, body_rpmin, fs, gs, status):
    """Serial twin of :func:`eval_batch` (parallel-equivalence checks)."""
    for i in range(xs.shape[0]):
        status[i] = eval_instance(
            pid, xs[i], eph_coef, target_elems, mu_sun, au_km,
            body_mu, body_radius, body_rpmin, fs[i], gs[i],
        )
