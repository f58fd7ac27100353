"""Multi-gravity-assist trajectory model with powered swing-bys.

Decodes an (initial epoch, event intervals) vector against a fly-by
sequence, chains prograde Lambert legs between the bodies, prices each
intermediate fly-by with a powered swing-by and the arrival with either an
orbit-insertion burn or an asteroid-impact figure of merit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as _k
from ._tables import BODY_MU, BODY_RPMIN, EPH_COEF, MU_SUN, TARGET_ELEMS

__all__ = [
    "AsteroidImpulse",
    "MgaDecoded",
    "MgaOutcome",
    "ModelError",
    "OrbitInsertion",
    "decode_mga",
    "evaluate_mga",
]


class ModelError(RuntimeError):
    """Trajectory evaluation failure, annotated with the failing leg."""

    def __init__(self, message: str, leg: int):
        super().__init__(f"{message} (leg {leg})")
        self.leg = leg


@dataclass(frozen=True)
class OrbitInsertion:
    """Capture into an orbit of given pericenter radius and eccentricity."""

    rp: float = 108950.0
    ecc: float = 0.98


@dataclass(frozen=True)
class AsteroidImpulse:
    """Impact arrival: merit is mass times the along-track velocity transfer.

    The impact leg runs opposite to the prograde sense, and the final mass
    follows via the rocket equation from the swing-by maneuver total plus
    any launch excess over what the launcher provides for free.
    """

    mass: float = 1500.0       # kg
    isp: float = 2500.0        # s
    vinf_free: float = 2.5     # km/s


ArrivalMode = OrbitInsertion | AsteroidImpulse


@dataclass(frozen=True)
class MgaDecoded:
    """Decoded decision vector of the powered swing-by model."""

    t0: float                 # mjd2000, days
    leg_times: np.ndarray     # days, one entry per leg
    sequence: tuple[int, ...]  # body ids, start .. target


@dataclass(frozen=True)
class MgaOutcome:
    """Per-event velocity changes and fly-by radii of one evaluation."""

    dv_total: float           # km/s, fixed-order sum of dv_events
    dv_events: np.ndarray     # [launch, fly-by 1.., arrival]
    rp_flybys: np.ndarray     # km, per intermediate fly-by
    impact_projection: float | None = None  # km^2/s^2 (impact mode only)
    mass_final: float | None = None         # kg (impact mode only)


def decode_mga(x, sequence) -> MgaDecoded:
    """Split a raw vector into epoch and leg durations for a sequence."""
    x = np.asarray(x, dtype=float)
    n_legs = len(sequence) - 1
    if x.shape != (1 + n_legs,):
        raise ValueError(
            f"dimension mismatch: expected {1 + n_legs} variables for "
            f"{len(sequence)} bodies, got {x.shape[0]}"
        )
    return MgaDecoded(float(x[0]), x[1:].copy(), tuple(int(b) for b in sequence))


def evaluate_mga(d: MgaDecoded, arrival: ArrivalMode) -> MgaOutcome:
    """Evaluate a decoded trajectory under the given arrival mode."""
    seq = np.asarray(d.sequence, dtype=np.int64)
    nb = seq.shape[0]
    dv_events = np.zeros(nb)
    rp_fly = np.zeros(nb - 2)

    if isinstance(arrival, OrbitInsertion):
        mode, rp, ecc, flip = _k.ARR_INSERTION, arrival.rp, arrival.ecc, False
    else:
        mode, rp, ecc, flip = _k.ARR_IMPACT, 0.0, 0.0, True

    aux, status = _k.mga_eval(
        d.t0, np.asarray(d.leg_times, dtype=float), seq, mode, rp, ecc, flip,
        EPH_COEF, TARGET_ELEMS, MU_SUN, BODY_MU, BODY_RPMIN,
        dv_events, rp_fly,
    )
    if status != _k.OK:
        raise ModelError("trajectory evaluation failed", leg=status // 100)

    total = 0.0
    for value in dv_events:
        total += value

    if isinstance(arrival, OrbitInsertion):
        return MgaOutcome(total, dv_events, rp_fly)

    g0 = 9.80665e-3
    burned = 0.0
    for value in dv_events[1:nb - 1]:
        burned += value
    if dv_events[0] > arrival.vinf_free:
        burned += dv_events[0] - arrival.vinf_free
    mass_final = arrival.mass * float(np.exp(-burned / (arrival.isp * g0)))
    return MgaOutcome(total, dv_events, rp_fly,
                      impact_projection=float(aux), mass_final=mass_final)
