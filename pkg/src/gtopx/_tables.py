"""Parsing of the bundled constants and bounds tables into numpy arrays.

Everything numeric the evaluation kernels consume lives in two shipped text
files, ``data/body_constants.txt`` and ``data/bounds.txt``.  They are parsed
exactly once at import; the resulting arrays are treated as immutable and are
passed into the compiled kernels as arguments (never mutated, never global
state), which keeps every evaluation pure and safely shareable across threads.
"""

from __future__ import annotations

import hashlib
import math
from importlib import resources

import numpy as np

_ELEMENT_ORDER = {"a": 0, "e": 1, "i": 2, "raan": 3, "argp": 4, "m": 5}

# element polynomial degree cap (Pluto's fit is quintic)
_MAX_COEF = 6


def _data_text(name: str) -> str:
    return resources.files("gtopx").joinpath("data").joinpath(name).read_text(encoding="utf-8")


def data_checksum(name: str) -> str:
    """sha256 of a bundled data file, as recorded in the README."""
    raw = resources.files("gtopx").joinpath("data").joinpath(name).read_bytes()
    return hashlib.sha256(raw).hexdigest()


def _records(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        yield lineno, stripped.split()


def _parse_body_constants(text: str):
    consts: dict[str, float] = {}
    body_mu = np.zeros(10)
    body_radius = np.zeros(10)
    body_rpmin = np.zeros(10)
    body_names: dict[int, str] = {}
    eph_coef = np.zeros((10, 6, _MAX_COEF))
    targets: dict[int, tuple[str, np.ndarray]] = {}

    for lineno, tok in _records(text):
        kind = tok[0]
        if kind == "const":
            consts[tok[1]] = float(tok[2])
        elif kind == "body":
            pid = int(tok[1])
            if not 1 <= pid <= 9:
                raise ValueError(f"body id out of range at line {lineno}")
            body_names[pid] = tok[2]
            body_mu[pid] = float(tok[3])
            body_radius[pid] = float(tok[4])
            body_rpmin[pid] = float(tok[5])
        elif kind == "elem":
            pid = int(tok[1])
            row = _ELEMENT_ORDER[tok[2]]
            coefs = [float(v) for v in tok[3:]]
            if len(coefs) > _MAX_COEF:
                raise ValueError(f"too many coefficients at line {lineno}")
            eph_coef[pid, row, : len(coefs)] = coefs
        elif kind == "target":
            tid = int(tok[1])
            targets[tid] = (tok[2], np.array([float(v) for v in tok[3:]]))
        else:
            raise ValueError(f"unknown record '{kind}' at line {lineno}")

    return consts, body_names, body_mu, body_radius, body_rpmin, eph_coef, targets


def _parse_bounds(text: str):
    rows: dict[int, dict[int, tuple[float, float]]] = {}
    for lineno, tok in _records(text):
        if tok[0] != "bound":
            raise ValueError(f"unknown record '{tok[0]}' at line {lineno}")
        pid, idx = int(tok[1]), int(tok[2])
        lo, hi = float(tok[3]), float(tok[4])
        if not lo < hi:
            raise ValueError(f"degenerate bound at line {lineno}")
        rows.setdefault(pid, {})[idx] = (lo, hi)

    bounds: dict[int, tuple[np.ndarray, np.ndarray]] = {}
    for pid, entries in rows.items():
        n = max(entries)
        if sorted(entries) != list(range(1, n + 1)):
            raise ValueError(f"bounds for instance {pid} are not contiguous")
        lb = np.array([entries[i][0] for i in range(1, n + 1)])
        ub = np.array([entries[i][1] for i in range(1, n + 1)])
        bounds[pid] = (lb, ub)
    return bounds


_consts, BODY_NAMES, BODY_MU, BODY_RADIUS, BODY_RPMIN, _eph_deg, _targets = (
    _parse_body_constants(_data_text("body_constants.txt"))
)

AU_KM: float = _consts["au_km"]
MU_SUN: float = _consts["mu_sun"]

# Convert the ephemeris table to radians / km once.  Row layout per planet:
# a [km], e [-], i, raan, argp, m [rad].
EPH_COEF = _eph_deg.copy()
EPH_COEF[:, 0, :] *= AU_KM
EPH_COEF[:, 2:6, :] *= math.pi / 180.0
EPH_COEF.setflags(write=False)

# Target rows: [a_km, e, i_rad, raan_rad, argp_rad, m_rad, epoch_mjd2000].
# Epochs in the data file are plain MJD; mjd2000 counts days from
# 2000-01-01 00:00 (JD 2451544.5, i.e. MJD 51544.0).
TARGET_IDS = sorted(_targets)
TARGET_NAMES = {tid: _targets[tid][0] for tid in TARGET_IDS}
TARGET_ELEMS = np.zeros((len(TARGET_IDS), 7))
for _k, _tid in enumerate(TARGET_IDS):
    _row = _targets[_tid][1]
    TARGET_ELEMS[_k, 0] = _row[1] * AU_KM
    TARGET_ELEMS[_k, 1] = _row[2]
    TARGET_ELEMS[_k, 2:6] = _row[3:7] * math.pi / 180.0
    TARGET_ELEMS[_k, 6] = _row[0] - 51544.0
TARGET_ELEMS.setflags(write=False)

for _arr in (BODY_MU, BODY_RADIUS, BODY_RPMIN):
    _arr.setflags(write=False)

BOUNDS = _parse_bounds(_data_text("bounds.txt"))
for _lb, _ub in BOUNDS.values():
    _lb.setflags(write=False)
    _ub.setflags(write=False)
