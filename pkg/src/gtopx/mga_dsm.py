"""Multi-gravity-assist model with one deep-space maneuver per leg.

The decision vector carries the launch epoch, the hyperbolic-excess vector in
polar form, per-leg durations and maneuver fractions, and per-fly-by radius
ratios and b-plane angles.  Fly-bys are unpowered; all propulsion happens at
the deep-space maneuvers and (for rendezvous missions) at arrival.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as _k
from ._tables import AU_KM, BODY_MU, BODY_RADIUS, EPH_COEF, MU_SUN, TARGET_ELEMS
from .mga import ModelError

__all__ = [
    "MgaDsmDecoded",
    "MgaDsmOutcome",
    "Rendezvous",
    "Sagas50AU",
    "decode_dsm",
    "evaluate_mga_dsm",
]


@dataclass(frozen=True)
class Rendezvous:
    """Arrival matches the target's full heliocentric velocity.

    ``count_launch`` adds the launch hyperbolic excess speed to the total
    (the Saturn mission budgets its launcher; the others do not).
    """

    count_launch: bool = False


@dataclass(frozen=True)
class Sagas50AU:
    """Fly by the final body and coast to a target solar distance.

    The objective is elapsed years until the distance is reached; launch and
    maneuver budgets turn into constraints at the problem-suite level.
    """

    distance_au: float = 50.0
    dv_total: float = 6.782
    dv_onboard: float = 1.782


ArrivalMode = Rendezvous | Sagas50AU


@dataclass(frozen=True)
class MgaDsmDecoded:
    """Decoded decision vector of the deep-space-maneuver model."""

    t0: float                # mjd2000, days
    vinf0: float             # launch hyperbolic excess speed, km/s
    u: float                 # launch asymptote longitude parameter
    v: float                 # launch asymptote latitude parameter
    leg_times: np.ndarray    # days per leg
    eta: np.ndarray          # maneuver epoch fraction per leg, (0, 1)
    rp_ratio: np.ndarray     # fly-by radius in planet radii
    bplane: np.ndarray       # fly-by plane angle, rad
    sequence: tuple[int, ...]


@dataclass(frozen=True)
class MgaDsmOutcome:
    dv_total: float          # km/s (mode-defined sum)
    dv_dsm: np.ndarray       # km/s per leg
    dv_arrival: float        # km/s (rendezvous modes)
    distance_reached: float | None = None  # AU (distance mode only)
    coast_years: float | None = None       # years past final fly-by


def _flyby_count(sequence, arrival: ArrivalMode) -> int:
    n_legs = len(sequence) - 1
    return n_legs if isinstance(arrival, Sagas50AU) else n_legs - 1


def decode_dsm(x, sequence, arrival: ArrivalMode = Rendezvous()) -> MgaDsmDecoded:
    """Positionally decode a raw vector for the given fly-by sequence.

    Layout: [t0, vinf, u, v, T_1..T_L, eta_1..eta_L, rp_1..rp_F, beta_1..beta_F]
    where L is the leg count and F the fly-by count (L-1 for rendezvous
    missions; L when the final body is flown by on the way out).
    """
    x = np.asarray(x, dtype=float)
    n_legs = len(sequence) - 1
    n_fly = _flyby_count(sequence, arrival)
    expected = 4 + 2 * n_legs + 2 * n_fly
    if x.shape != (expected,):
        raise ValueError(
            f"dimension mismatch: expected {expected} variables for "
            f"{len(sequence)} bodies, got {x.shape[0]}"
        )
    pos = 4
    leg_times = x[pos:pos + n_legs].copy(); pos += n_legs
    eta = x[pos:pos + n_legs].copy(); pos += n_legs
    rp_ratio = x[pos:pos + n_fly].copy(); pos += n_fly
    bplane = x[pos:pos + n_fly].copy()
    return MgaDsmDecoded(float(x[0]), float(x[1]), float(x[2]), float(x[3]),
                         leg_times, eta, rp_ratio, bplane,
                         tuple(int(b) for b in sequence))


def evaluate_mga_dsm(d: MgaDsmDecoded, arrival: ArrivalMode) -> MgaDsmOutcome:
    """Evaluate a decoded trajectory under the given arrival mode."""
    seq = np.asarray(d.sequence, dtype=np.int64)
    n_legs = seq.shape[0] - 1
    dv_dsm = np.zeros(n_legs)

    if isinstance(arrival, Sagas50AU):
        mode = _k.DSM_DISTANCE
        r_target = arrival.distance_au * AU_KM
    else:
        mode = _k.DSM_RENDEZVOUS
        r_target = 0.0

    aux, status = _k.mga_dsm_eval(
        d.t0, d.vinf0, d.u, d.v,
        np.asarray(d.leg_times, dtype=float), np.asarray(d.eta, dtype=float),
        np.asarray(d.rp_ratio, dtype=float), np.asarray(d.bplane, dtype=float),
        seq, mode, r_target,
        EPH_COEF, TARGET_ELEMS, MU_SUN, BODY_MU, BODY_RADIUS,
        dv_dsm,
    )
    if status != _k.OK:
        raise ModelError("trajectory evaluation failed", leg=status // 100)

    if isinstance(arrival, Rendezvous):
        total = 0.0
        for value in dv_dsm:
            total += value
        total += aux
        if arrival.count_launch:
            total += d.vinf0
        return MgaDsmOutcome(total, dv_dsm, float(aux))

    onboard = 0.0
    for value in dv_dsm:
        onboard += value
    if aux >= 0.0:
        return MgaDsmOutcome(d.vinf0 + onboard, dv_dsm, 0.0,
                             distance_reached=arrival.distance_au,
                             coast_years=float(aux) / _k.DAY / 365.25)
    return MgaDsmOutcome(d.vinf0 + onboard, dv_dsm, 0.0,
                         distance_reached=None, coast_years=None)
