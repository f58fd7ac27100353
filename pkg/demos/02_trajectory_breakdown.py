"""Break a mission evaluation into its physical pieces.

Walks the Rosetta trajectory leg by leg with the astrodynamics layer:
planet states from the analytic ephemerides, a deep-space maneuver per leg,
unpowered swing-bys in between, and the comet rendezvous at the end.
"""

import numpy as np

from gtopx import astro, mga_dsm, solutions

SEQUENCE = (astro.EARTH, astro.EARTH, astro.MARS, astro.EARTH, astro.EARTH,
            astro.COMET_67P)

x = solutions.load("rosetta_prev_best")
decoded = mga_dsm.decode_dsm(x, SEQUENCE)
outcome = mga_dsm.evaluate_mga_dsm(decoded, mga_dsm.Rendezvous())

print("launch", f"mjd2000 = {decoded.t0:.3f}",
      f"v-infinity = {decoded.vinf0:.4f} km/s (not charged to the objective)")
t = decoded.t0
names = ["Earth", "Earth", "Mars", "Earth", "Earth", "67P"]
for leg in range(5):
    t += decoded.leg_times[leg]
    print(f"leg {leg + 1}: {decoded.leg_times[leg]:7.2f} d -> {names[leg + 1]:5} "
          f"(DSM at {100 * decoded.eta[leg]:.1f}% of the leg, "
          f"dv = {outcome.dv_dsm[leg]:.5f} km/s)")
print(f"rendezvous burn: {outcome.dv_arrival:.5f} km/s")
print(f"total: {outcome.dv_total:.8f} km/s")

# the swing-by geometry is available from the astro layer directly
earth = astro.ephemeris(astro.EARTH, decoded.t0 + decoded.leg_times[0])
print("\nfirst Earth fly-by:")
print("  planet speed:", np.linalg.norm(earth.v), "km/s")
print("  fly-by radius:", decoded.rp_ratio[0] * astro.body(astro.EARTH).radius, "km")
